"""
Graph 数据模型
简单无向图：顶点编号为 [0, n) 的连续整数，构造后不可变
"""
from dataclasses import dataclass

import networkx as nx

from errors import LoopEdge, VertexOutOfRange


@dataclass(frozen=True, order=True)
class Edge:
    """无向边，规范顺序 u < v"""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise LoopEdge(self.u)
        if self.u > self.v:
            # frozen dataclass 只能通过 object.__setattr__ 交换端点
            u, v = self.v, self.u
            object.__setattr__(self, 'u', u)
            object.__setattr__(self, 'v', v)

    def other(self, x):
        """返回边的另一个端点"""
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"vertex {x} is not an endpoint of {self}")

    def __iter__(self):
        yield self.u
        yield self.v

    def __str__(self):
        return f"{self.u}-{self.v}"


class Graph:
    """
    不可变简单无向图

    属性：
        n: 顶点数
        edges: frozenset[Edge]
    邻接集合由边集推导，算法内部需要删边时使用自己的工作副本
    """

    __slots__ = ('_n', '_edges', '_adj')

    def __init__(self, n, edges):
        self._n = n
        self._edges = frozenset(edges)
        adj = [set() for _ in range(n)]
        for e in self._edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        self._adj = tuple(frozenset(s) for s in adj)

    @property
    def n(self):
        return self._n

    @property
    def edges(self):
        return self._edges

    @property
    def m(self):
        return len(self._edges)

    def vertices(self):
        return range(self._n)

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def max_degree(self):
        return max((len(s) for s in self._adj), default=0)

    def min_degree(self):
        return min((len(s) for s in self._adj), default=0)

    def has_edge(self, u, v):
        return 0 <= u < self._n and v in self._adj[u]

    def sorted_edges(self):
        """按 (u, v) 字典序排列的边列表，所有输出都使用这个顺序"""
        return sorted(self._edges)

    def to_networkx(self):
        """转换为 networkx.Graph（保留孤立点）"""
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from((e.u, e.v) for e in self._edges)
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"<Graph n={self._n} m={len(self._edges)}>"


def build_graph(n, pairs):
    """
    由顶点数和顶点对列表构造 Graph

    重复的顶点对会被合并；自环和越界端点报错

    Args:
        n: 顶点数（非负整数）
        pairs: 可迭代的 (u, v) 顶点对

    Returns:
        Graph

    Raises:
        LoopEdge: 出现 (u, u)
        VertexOutOfRange: 端点不在 [0, n) 中

    Examples:
        >>> build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).m
        5
    """
    if n < 0:
        raise VertexOutOfRange(n, n)
    edges = set()
    for u, v in pairs:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        if u == v:
            raise LoopEdge(u)
        edges.add(Edge(u, v))
    return Graph(n, edges)
