"""
Λ 星序列分解服务

在剩余边导出的图 Gi 上反复选取 nice vertex wi，取出
    Λi = { wi v ∈ E(Gi) : deg_Gi(v) <= t }
直到没有边为止。degenerate(k) 模式 t = k；forest 模式 t = 2。
"""
from errors import NoEdges, NoNiceVertex, PreconditionViolated, InvariantViolation
from models import Edge, StarStep, StarDecomposition
from .analysis_service import degeneracy

# forest 模式：收集 2- 点的边，中心剩余度数 <= 1
FOREST_THRESHOLD = 2
FOREST_SLACK = 1


class _WorkingGraph:
    """Gi 的可变工作副本：邻接集合 + 实时度数，度数为 0 的点视为不存在"""

    def __init__(self, g):
        self.adj = [set(g.neighbors(v)) for v in g.vertices()]
        self.edge_count = g.m

    def degree(self, v):
        return len(self.adj[v])

    def remove_edge(self, u, v):
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.edge_count -= 1


def _scan_nice_vertex(adj, threshold, slack):
    """
    升序扫描非孤立点，返回第一个满足
        |{v ∈ N(w) : deg(v) <= threshold}| >= max(1, deg(w) - slack)
    的顶点；没有则返回 None
    """
    for w, neighbors in enumerate(adj):
        if not neighbors:
            continue
        light = sum(1 for v in neighbors if len(adj[v]) <= threshold)
        if light >= max(1, len(neighbors) - slack):
            return w
    return None


def _has_edges(adj):
    return any(adj)


def find_nice_vertex(g, k):
    """
    k-退化图中的 nice vertex：至少 max{1, deg(w) - k} 个邻居是 k- 点

    Args:
        g: Graph（至少一条边，k-退化）
        k: 整数

    Returns:
        int: 满足条件的最小编号

    Raises:
        NoEdges: 图没有边
        NoNiceVertex: 图不是 k-退化的
    """
    adj = [g.neighbors(v) for v in g.vertices()]
    if not _has_edges(adj):
        raise NoEdges()
    w = _scan_nice_vertex(adj, k, k)
    if w is None:
        raise NoNiceVertex(f"no vertex has max(1, deg-{k}) neighbors of degree <= {k}")
    return w


def find_nice_vertex_forest(g):
    """
    3+ 点导出森林的图中的 nice vertex：至少 max{1, deg(w) - 1} 个邻居是 2- 点

    Raises:
        NoEdges: 图没有边
        NoNiceVertex: 3+ 点导出的子图含圈（前置条件不成立）
    """
    adj = [g.neighbors(v) for v in g.vertices()]
    if not _has_edges(adj):
        raise NoEdges()
    w = _scan_nice_vertex(adj, FOREST_THRESHOLD, FOREST_SLACK)
    if w is None:
        raise NoNiceVertex("no vertex has max(1, deg-1) neighbors of degree <= 2")
    return w


def build_star_sequence(g, mode):
    """
    构造 Λ 星序列

    Args:
        g: Graph
        mode: ColoringMode；degenerate 的 auto 取 k = degeneracy(g)

    Returns:
        StarDecomposition（mode 中的 k 已确定）

    Raises:
        PreconditionViolated: k < 1 或 degeneracy(g) > k
        NoNiceVertex: forest 模式下前置条件不成立
    """
    if mode.is_forest:
        threshold, slack = FOREST_THRESHOLD, FOREST_SLACK
        resolved = mode
    else:
        kd, _ = degeneracy(g)
        k = max(1, kd) if mode.is_auto else mode.k
        if k < 1:
            raise PreconditionViolated(f"k must be >= 1, got {k}")
        if kd > k:
            raise PreconditionViolated(f"graph is {kd}-degenerate, not {k}-degenerate")
        threshold, slack = k, k
        resolved = mode.with_k(k)

    work = _WorkingGraph(g)
    steps = []
    centers = set()
    while work.edge_count > 0:
        w = _scan_nice_vertex(work.adj, threshold, slack)
        if w is None:
            raise NoNiceVertex(f"step {len(steps) + 1}: remaining graph has no nice vertex")

        leaves = sorted(v for v in work.adj[w] if work.degree(v) <= threshold)
        for v in leaves:
            work.remove_edge(w, v)

        # 不变量：中心互不相同；中心剩余度数 <= slack
        if w in centers:
            raise InvariantViolation(f"center {w} appears twice")
        if work.degree(w) > slack:
            raise InvariantViolation(f"center {w} keeps degree {work.degree(w)} > {slack}")
        centers.add(w)
        steps.append(StarStep(len(steps) + 1, w, tuple(Edge(w, v) for v in leaves)))

    decomposition = StarDecomposition(resolved, tuple(steps))
    check_partition(g, decomposition)
    return decomposition


def check_partition(g, decomposition):
    """
    校验分解：各步边集两两不交、并为 E(G)、每条边都与中心关联、中心互不相同

    Raises:
        InvariantViolation
    """
    seen = set()
    for step in decomposition.steps:
        if not step.star_edges:
            raise InvariantViolation(f"step {step.index} is empty")
        for e in step.star_edges:
            if step.center not in (e.u, e.v):
                raise InvariantViolation(f"edge {e} in step {step.index} misses center {step.center}")
            if e in seen:
                raise InvariantViolation(f"edge {e} appears in two steps")
            seen.add(e)
    if seen != set(g.edges):
        raise InvariantViolation("steps do not cover E(G)")
    centers = decomposition.centers()
    if len(centers) != len(set(centers)):
        raise InvariantViolation("duplicate centers")
    if decomposition.m > g.m:
        raise InvariantViolation("more steps than edges")
