"""
图结构分析服务
退化度、冲突边集合、结构检查（3+ 点森林 / 双连通 / 无弦 / 极小 2-连通）
"""
import heapq

import networkx as nx
from networkx.algorithms.connectivity import local_node_connectivity

from errors import EdgeNotInGraph, InvariantViolation
from models import Edge, StructureReport


def degeneracy(g):
    """
    计算退化度和删除顺序

    反复删除当前度数最小的顶点（同度数取编号最小），k 为删除时度数的最大值。
    桶队列实现：每个度数一个最小堆，惰性删除过期条目，O((n + m) log n)。

    Args:
        g: Graph

    Returns:
        tuple: (k, ordering)

    Examples:
        >>> from models import build_graph
        >>> degeneracy(build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]))[0]
        2
    """
    n = g.n
    if n == 0:
        return 0, []

    deg = [g.degree(v) for v in range(n)]
    # 按编号升序放入，已经是合法的堆
    buckets = [[] for _ in range(max(deg) + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)

    removed = [False] * n
    ordering = []
    k = 0
    d = 0
    while len(ordering) < n:
        while True:
            bucket = buckets[d]
            while bucket and (removed[bucket[0]] or deg[bucket[0]] != d):
                heapq.heappop(bucket)
            if bucket:
                break
            d += 1

        v = heapq.heappop(bucket)
        k = max(k, deg[v])
        removed[v] = True
        ordering.append(v)
        for u in g.neighbors(v):
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(buckets[deg[u]], u)
        # 删除一个点后最小度数最多下降 1
        d = max(d - 1, 0)

    if k > g.max_degree():
        raise InvariantViolation(f"degeneracy {k} exceeds max degree {g.max_degree()}")
    return k, ordering


def conflict_set(g, e):
    """
    与 e = uv 冲突的边：除 e 外所有与 N(u) ∪ N(v) 中某点关联的边

    强边着色中这些边必须与 e 颜色不同；关系是对称的。

    Args:
        g: Graph
        e: Edge

    Returns:
        set[Edge]

    Raises:
        EdgeNotInGraph
    """
    if e not in g.edges:
        raise EdgeNotInGraph(e)
    region = g.neighbors(e.u) | g.neighbors(e.v)
    result = {Edge(x, y) for x in region for y in g.neighbors(x)}
    result.discard(e)
    return result


def is_three_plus_forest(g):
    """3+ 点（度数 >= 3）导出的子图是否无圈；空导出子图算森林"""
    heavy = [v for v in g.vertices() if g.degree(v) >= 3]
    if not heavy:
        return True
    return nx.is_forest(g.to_networkx().subgraph(heavy))


def is_biconnected(g):
    """2-连通；顶点数小于 3 的图一律不算"""
    if g.n < 3:
        return False
    return nx.is_biconnected(g.to_networkx())


def is_chordless(g):
    """
    每个圈都是导出圈

    边 uv 是某个圈的弦，当且仅当 G - uv 中 u、v 之间存在两条内部不交的路。
    逐边计算 u-v 局部点连通度（cutoff=2）。
    """
    nxg = g.to_networkx()
    for e in g.sorted_edges():
        # G - uv 中两端点都需要度数 >= 2
        if g.degree(e.u) < 3 or g.degree(e.v) < 3:
            continue
        nxg.remove_edge(e.u, e.v)
        try:
            if local_node_connectivity(nxg, e.u, e.v, cutoff=2) >= 2:
                return False
        finally:
            nxg.add_edge(e.u, e.v)
    return True


def structure_report(g):
    """
    生成结构检查报告

    minimally_two_connected = biconnected 且 chordless（2-连通图无弦等价于极小 2-连通）

    Returns:
        StructureReport
    """
    k, _ = degeneracy(g)
    biconnected = is_biconnected(g)
    chordless = is_chordless(g)
    return StructureReport(
        n=g.n,
        m=g.m,
        degeneracy=k,
        max_degree=g.max_degree(),
        min_degree=g.min_degree(),
        three_plus_forest=is_three_plus_forest(g),
        biconnected=biconnected,
        chordless=chordless,
        minimally_two_connected=biconnected and chordless,
    )
