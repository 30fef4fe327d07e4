"""
精确强色指数服务
小图上的分支定界搜索，作为所有上界的对照基准
"""
import time

import networkx as nx

from errors import TooLarge, TimeBudgetExceeded, InvariantViolation
from models import EdgeColoring, SearchLimits
from .analysis_service import conflict_set
from .coloring_service import verify_strong_coloring

# 边数不超过该值时，团下界用穷举求精确最大团
EXACT_CLIQUE_EDGES = 20

# 每搜索这么多个节点检查一次时间
_CLOCK_INTERVAL = 1024


class ConflictGraph:
    """
    冲突图（强边着色 = 冲突图的顶点着色），搜索前一次性构造

    edges: 按规范顺序排列的边
    masks: masks[i] 为与第 i 条边冲突的边集合（位掩码）
    """

    def __init__(self, g):
        self.edges = g.sorted_edges()
        index = {e: i for i, e in enumerate(self.edges)}
        self.masks = []
        for e in self.edges:
            mask = 0
            for f in conflict_set(g, e):
                mask |= 1 << index[f]
            self.masks.append(mask)

    def __len__(self):
        return len(self.edges)

    def degree(self, i):
        return bin(self.masks[i]).count('1')

    def is_complete(self):
        full = (1 << len(self.edges)) - 1
        return all(mask | (1 << i) == full for i, mask in enumerate(self.masks))

    def to_networkx(self):
        h = nx.Graph()
        h.add_nodes_from(range(len(self.edges)))
        for i, mask in enumerate(self.masks):
            j = mask >> (i + 1)
            offset = i + 1
            while j:
                if j & 1:
                    h.add_edge(i, offset)
                j >>= 1
                offset += 1
        return h


def _greedy_clique(conflicts):
    """按冲突度降序贪心构造一个极大团"""
    order = sorted(range(len(conflicts)), key=lambda i: (-conflicts.degree(i), i))
    chosen = []
    common = (1 << len(conflicts)) - 1
    for i in order:
        if common >> i & 1:
            chosen.append(i)
            common &= conflicts.masks[i]
    return len(chosen)


def strong_clique_lower_bound(g):
    """
    两两冲突的边集合必须用不同颜色，其大小是 χ's 的下界

    边数 <= 20 时返回最大团（穷举），否则返回贪心得到的极大团

    Returns:
        int
    """
    if g.m == 0:
        return 0
    conflicts = ConflictGraph(g)
    if conflicts.is_complete():
        return g.m
    if g.m <= EXACT_CLIQUE_EDGES:
        return max(len(c) for c in nx.find_cliques(conflicts.to_networkx()))
    return _greedy_clique(conflicts)


class _Search:
    """一次 q-着色判定搜索（静态顺序回溯 + 颜色按序引入）"""

    def __init__(self, conflicts, q, deadline, budget):
        self.conflicts = conflicts
        self.q = q
        self.deadline = deadline
        self.budget = budget
        # fail-first：冲突度降序，同度按规范边顺序
        self.order = sorted(range(len(conflicts)), key=lambda i: (-conflicts.degree(i), i))
        self.colors = [-1] * len(conflicts)
        self.class_masks = [0] * q  # class_masks[c]：已着 c 色的边集合
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes % _CLOCK_INTERVAL == 0 and time.monotonic() > self.deadline:
            raise TimeBudgetExceeded(self.budget)

    def run(self):
        return self._extend(0, 0)

    def _extend(self, depth, used):
        if depth == len(self.order):
            return True
        self._tick()
        i = self.order[depth]
        conflict_mask = self.conflicts.masks[i]
        # 对称性剪枝：新颜色只能是当前最大颜色 + 1
        for c in range(min(used + 1, self.q)):
            if self.class_masks[c] & conflict_mask:
                continue
            self.colors[i] = c
            self.class_masks[c] |= 1 << i
            if self._extend(depth + 1, max(used, c + 1)):
                return True
            self.class_masks[c] &= ~(1 << i)
            self.colors[i] = -1
        return False


def _check_size(g, limits):
    if g.m > limits.max_edges:
        raise TooLarge(g.m, limits.max_edges)


def _decide(conflicts, q, deadline, budget):
    if len(conflicts) == 0:
        return EdgeColoring()
    if q <= 0:
        return None
    # 冲突图是完全图时，答案只取决于 q >= |E|
    if conflicts.is_complete():
        if q < len(conflicts):
            return None
        return EdgeColoring({e: i for i, e in enumerate(conflicts.edges)})
    search = _Search(conflicts, q, deadline, budget)
    if not search.run():
        return None
    return EdgeColoring({e: search.colors[i] for i, e in enumerate(conflicts.edges)})


def is_strongly_colorable(g, q, limits=None):
    """
    判定 g 是否有至多 q 色的强边着色

    Args:
        g: Graph
        q: 颜色数
        limits: SearchLimits

    Returns:
        EdgeColoring 或 None（确定不存在）

    Raises:
        TooLarge: 边数超过 limits.max_edges
        TimeBudgetExceeded: 超时，结果未知（不同于 None）
    """
    limits = limits or SearchLimits()
    _check_size(g, limits)
    deadline = time.monotonic() + limits.time_budget
    return _decide(ConflictGraph(g), q, deadline, limits.time_budget)


def exact_strong_chromatic_index(g, limits=None):
    """
    精确强色指数：从团下界开始逐个增加 q，直到可着色

    Returns:
        tuple: (chi, witness)

    Raises:
        TooLarge, TimeBudgetExceeded
    """
    limits = limits or SearchLimits()
    _check_size(g, limits)
    deadline = time.monotonic() + limits.time_budget
    if g.m == 0:
        return 0, EdgeColoring()

    conflicts = ConflictGraph(g)
    q = strong_clique_lower_bound(g)
    while q <= g.m:
        witness = _decide(conflicts, q, deadline, limits.time_budget)
        if witness is not None:
            if not verify_strong_coloring(g, witness).valid or witness.colors_used != q:
                raise InvariantViolation(f"witness for chi={q} does not verify")
            return q, witness
        q += 1
    raise InvariantViolation("no coloring with |E| colors")
