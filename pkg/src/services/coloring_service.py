"""
强边着色服务
调色板上界、文献上界表、按 Λ 逆序的贪心着色（含列表版本）、验证器
"""
from typing import NamedTuple

from errors import (
    KExceedsDelta, PreconditionViolated, PaletteExhausted, ListTooSmall,
    UnknownEdge, InvariantViolation,
)
from models import (
    ColoringMode, EdgeColoring, Palette, ColorLists, ColoringReport,
    BoundTable, StarDecomposition,
)
from utils import SplitMix64
from .analysis_service import degeneracy, conflict_set, is_three_plus_forest
from .decomposition_service import build_star_sequence


class GreedyResult(NamedTuple):
    """贪心着色结果；peak_conflicts 为着色时被占用颜色数的最大值"""

    coloring: EdgeColoring
    palette: Palette
    decomposition: StarDecomposition
    peak_conflicts: int


def _check_k(k, delta):
    if k < 1:
        raise PreconditionViolated(f"k must be >= 1, got {k}")
    if k > delta:
        raise KExceedsDelta(k, delta)


def palette_bound(mode, delta):
    """
    调色板大小

    degenerate(k): (4k - 2)Δ - 2k² + 1
    forest:        4Δ - 3

    Examples:
        >>> palette_bound(ColoringMode.degenerate(2), 2)
        5
        >>> palette_bound(ColoringMode.forest(), 2)
        5
    """
    if mode.is_forest:
        if delta < 1:
            raise PreconditionViolated(f"forest bound needs delta >= 1, got {delta}")
        return 4 * delta - 3
    if mode.k is None:
        raise PreconditionViolated("palette_bound needs an explicit k")
    k = mode.k
    _check_k(k, delta)
    return (4 * k - 2) * delta - 2 * k * k + 1


def bound_table(k, delta):
    """
    在 (k, Δ) 处计算各文献上界

    与 k 无关的 2-退化图公式（Chang–Narayanan 10Δ-10、Luo–Yu 8Δ-4）以及
    无弦图的 8Δ-6 只在 k = 2 时给出。

    Returns:
        BoundTable

    Examples:
        >>> bound_table(2, 3).entries['star_greedy']
        11
    """
    _check_k(k, delta)
    entries = {}
    chordless_cn = None
    if k == 2:
        entries['chang_narayanan'] = 10 * delta - 10
        entries['luo_yu'] = 8 * delta - 4
        chordless_cn = 8 * delta - 6
    entries['debski'] = (4 * k - 1) * delta - k * (2 * k + 1) + 1
    entries['yu'] = (4 * k - 2) * delta - 2 * k * k + k + 1
    entries['star_greedy'] = (4 * k - 2) * delta - 2 * k * k + 1

    if delta % 2 == 0:
        conjecture = 5 * delta * delta // 4
    else:
        conjecture = (5 * delta * delta - 2 * delta + 1) // 4

    return BoundTable(
        k=k,
        delta=delta,
        entries=entries,
        conjecture=conjecture,
        trivial=2 * delta * (delta - 1) + 1,
        chordless_cn=chordless_cn,
    )


def resolve_palette(g, mode):
    """
    检查前置条件并确定调色板

    Returns:
        tuple: (Palette, 用于分解的 ColoringMode)；无边图返回 (Palette(0), None)
    """
    delta = g.max_degree()
    kd, _ = degeneracy(g)

    if g.m == 0:
        # 无边图没有合法的 k >= 1，统一报告退化度 0
        k = None if mode.is_forest else kd
        return Palette(size=0, mode=mode, k=k, delta=delta), None

    if mode.is_forest:
        if not is_three_plus_forest(g):
            raise PreconditionViolated("3+-vertices do not induce a forest")
        return Palette(size=palette_bound(mode, delta), mode=mode, k=None, delta=delta), mode

    k = kd if mode.is_auto else mode.k
    if k < kd:
        raise PreconditionViolated(f"graph is {kd}-degenerate, not {k}-degenerate")
    _check_k(k, delta)
    resolved = mode.with_k(k)
    return Palette(size=palette_bound(resolved, delta), mode=resolved, k=k, delta=delta), resolved


def _greedy(g, mode, pick):
    """
    公共贪心流程：按 Λm ... Λ1 的顺序着色，星内按非中心端点升序

    Args:
        pick: (edge, used_colors, palette) -> color 或 None
    """
    palette, resolved = resolve_palette(g, mode)
    if resolved is None:
        return GreedyResult(EdgeColoring(), palette, StarDecomposition(mode), 0)

    decomposition = build_star_sequence(g, resolved)
    assignment = {}
    peak = 0
    for step in reversed(decomposition.steps):
        for edge in step.star_edges:
            used = {assignment[f] for f in conflict_set(g, edge) if f in assignment}
            peak = max(peak, len(used))
            color = pick(edge, used, palette)
            if color is None:
                raise PaletteExhausted(edge)
            assignment[edge] = color

    coloring = EdgeColoring(assignment)
    report = verify_strong_coloring(g, coloring)
    if not report.valid:
        raise InvariantViolation(f"greedy output has {len(report.violations)} violations")
    return GreedyResult(coloring, palette, decomposition, peak)


def greedy_strong_coloring(g, mode):
    """
    贪心强边着色

    每条边取 [0, palette) 中不被冲突集合里已着色边占用的最小颜色。
    前置条件成立时总有可用颜色，PaletteExhausted 说明输入不满足条件或实现有误。

    Args:
        g: Graph
        mode: ColoringMode（degenerate auto / k，或 forest）

    Returns:
        GreedyResult: (coloring, palette, decomposition, peak_conflicts)
    """
    def smallest_free(edge, used, palette):
        for c in range(palette.size):
            if c not in used:
                return c
        return None

    return _greedy(g, mode, smallest_free)


def greedy_list_strong_coloring(g, lists, mode):
    """
    列表版本：每条边从自己的列表里取最小的可用颜色

    Args:
        g: Graph
        lists: ColorLists，每个列表大小至少为 palette_bound

    Returns:
        EdgeColoring

    Raises:
        ListTooSmall: 某条边的列表缺失或太小
    """
    palette, resolved = resolve_palette(g, mode)
    if resolved is not None:
        for edge in g.sorted_edges():
            allowed = lists.get(edge)
            actual = 0 if allowed is None else len(allowed)
            if actual < palette.size:
                raise ListTooSmall(edge, palette.size, actual)

    def smallest_listed(edge, used, palette):
        for c in sorted(lists.get(edge)):
            if c not in used:
                return c
        return None

    return _greedy(g, mode, smallest_listed).coloring


def random_color_lists(g, size, universe, seed):
    """
    为每条边抽取 size 个互不相同的颜色，取自 [0, universe)

    Returns:
        ColorLists
    """
    rng = SplitMix64(seed)
    return ColorLists.of({e: rng.sample(range(universe), size) for e in g.sorted_edges()})


def verify_strong_coloring(g, c):
    """
    验证（可能是部分的）强边着色

    只检查已着色边之间的冲突；未着色的边列在 uncolored 中。
    violations 中每对冲突只出现一次，按字典序排列。

    Raises:
        UnknownEdge: 着色中出现图里没有的边
    """
    for edge in c.assignment:
        if edge not in g.edges:
            raise UnknownEdge(edge)

    violations = []
    for edge, color in c.sorted_items():
        for other in conflict_set(g, edge):
            if other > edge and c.color_of(other) == color:
                violations.append((edge, other))
    violations.sort()

    uncolored = tuple(e for e in g.sorted_edges() if e not in c)
    return ColoringReport(
        valid=not violations and not uncolored,
        violations=tuple(violations),
        uncolored=uncolored,
    )
