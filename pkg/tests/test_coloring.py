"""
上界公式、贪心强边着色、列表着色和验证器
"""
import pytest

from conftest import read_golden
from errors import (
    KExceedsDelta, PreconditionViolated, ListTooSmall, UnknownEdge,
)
from models import ColoringMode, ColorLists, Edge, EdgeColoring, build_graph
from services import (
    palette_bound, bound_table, greedy_strong_coloring, greedy_list_strong_coloring,
    random_color_lists, verify_strong_coloring, serialize_coloring,
    parse_color_lists, generate, parse_gen_spec, conflict_set,
)
from utils import SplitMix64


class TestPaletteBound:
    @pytest.mark.parametrize("k,delta,expected", [
        (1, 1, 1), (1, 4, 7), (2, 2, 5), (2, 3, 11), (3, 3, 13), (3, 5, 33),
    ])
    def test_degenerate(self, k, delta, expected):
        assert palette_bound(ColoringMode.degenerate(k), delta) == expected

    @pytest.mark.parametrize("delta,expected", [(1, 1), (2, 5), (3, 9), (10, 37)])
    def test_forest(self, delta, expected):
        assert palette_bound(ColoringMode.forest(), delta) == expected

    def test_k_exceeds_delta(self):
        with pytest.raises(KExceedsDelta):
            palette_bound(ColoringMode.degenerate(3), 2)

    def test_k_zero(self):
        with pytest.raises(PreconditionViolated):
            palette_bound(ColoringMode.degenerate(0), 2)

    def test_forest_needs_edges(self):
        with pytest.raises(PreconditionViolated):
            palette_bound(ColoringMode.forest(), 0)

    def test_auto_needs_k(self):
        with pytest.raises(PreconditionViolated):
            palette_bound(ColoringMode.degenerate(), 3)


class TestBoundTable:
    def test_k2_delta3(self):
        table = bound_table(2, 3)
        assert table.entries == {
            'chang_narayanan': 20,
            'luo_yu': 20,
            'debski': 12,
            'yu': 13,
            'star_greedy': 11,
        }
        assert table.best() == 11
        assert table.conjecture == 10
        assert table.trivial == 13
        assert table.chordless_cn == 18

    def test_k1_delta4(self):
        table = bound_table(1, 4)
        assert table.entries == {'debski': 10, 'yu': 8, 'star_greedy': 7}
        assert table.chordless_cn is None
        assert table.conjecture == 20

    def test_star_greedy_is_tightest(self):
        for k in range(1, 6):
            for delta in range(k, 12):
                table = bound_table(k, delta)
                assert table.entries['star_greedy'] == table.best()

    def test_k_exceeds_delta(self):
        with pytest.raises(KExceedsDelta):
            bound_table(4, 3)


class TestGreedy:
    def test_c5_is_tight(self, c5):
        result = greedy_strong_coloring(c5, ColoringMode.degenerate())
        assert result.palette.size == 5
        assert result.palette.k == 2
        assert result.coloring.colors_used == 5
        assert result.coloring.assignment == {
            Edge(3, 4): 0, Edge(2, 3): 1, Edge(1, 2): 2, Edge(0, 1): 3, Edge(0, 4): 4,
        }
        assert result.peak_conflicts == 4

    def test_c5_forest_mode(self, c5):
        result = greedy_strong_coloring(c5, ColoringMode.forest())
        assert result.palette.size == 5
        assert result.coloring.colors_used == 5

    def test_p3(self, p3):
        result = greedy_strong_coloring(p3, ColoringMode.degenerate())
        assert result.palette.size == 3
        assert result.coloring.assignment == {Edge(0, 1): 0, Edge(1, 2): 1}

    def test_edgeless(self):
        result = greedy_strong_coloring(build_graph(3, []), ColoringMode.degenerate())
        assert len(result.coloring) == 0
        assert result.palette.size == 0
        assert result.palette.k == 0

    def test_edgeless_explicit_k_reports_degeneracy(self):
        result = greedy_strong_coloring(build_graph(3, []), ColoringMode.degenerate(5))
        assert result.palette.size == 0
        assert result.palette.k == 0

    def test_forest_mode_precondition(self):
        g = generate(parse_gen_spec("corona_cycle:3"))
        with pytest.raises(PreconditionViolated):
            greedy_strong_coloring(g, ColoringMode.forest())

    def test_k_too_small(self, c5):
        with pytest.raises(PreconditionViolated):
            greedy_strong_coloring(c5, ColoringMode.degenerate(1))

    def test_k_exceeds_delta(self, c5):
        with pytest.raises(KExceedsDelta):
            greedy_strong_coloring(c5, ColoringMode.degenerate(3))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_random_within_bound(self, k):
        for seed in range(25):
            g = generate(parse_gen_spec(f"random_k_degenerate:n=30,k={k},seed={seed}"))
            result = greedy_strong_coloring(g, ColoringMode.degenerate(k))
            assert verify_strong_coloring(g, result.coloring).valid
            assert result.coloring.colors_used <= result.palette.size
            bound = (4 * k - 2) * g.max_degree() - 2 * k * k + 1
            assert result.peak_conflicts <= bound - 1

    def test_forest_mode_peak(self):
        for seed in range(25):
            g = generate(parse_gen_spec(f"random_three_plus_forest:n=30,seed={seed}"))
            result = greedy_strong_coloring(g, ColoringMode.forest())
            assert verify_strong_coloring(g, result.coloring).valid
            assert result.peak_conflicts <= 4 * g.max_degree() - 4

    def test_colors_within_palette(self):
        g = generate(parse_gen_spec("random_k_degenerate:n=30,k=2,seed=9"))
        result = greedy_strong_coloring(g, ColoringMode.degenerate())
        assert all(0 <= c < result.palette.size for c in result.coloring.assignment.values())


class TestListColoring:
    def test_disjoint_lists_golden(self, c5):
        lists = parse_color_lists(read_golden("c5_disjoint.lists"))
        coloring = greedy_list_strong_coloring(c5, lists, ColoringMode.degenerate())
        assert serialize_coloring(coloring) == read_golden("c5_disjoint_lists.coloring")

    def test_shared_lists(self, c5):
        lists = ColorLists.of({e: range(10, 15) for e in c5.edges})
        coloring = greedy_list_strong_coloring(c5, lists, ColoringMode.degenerate())
        assert coloring.assignment == {
            Edge(3, 4): 10, Edge(2, 3): 11, Edge(1, 2): 12, Edge(0, 1): 13, Edge(0, 4): 14,
        }

    def test_list_too_small(self, c5):
        lists = ColorLists.of({e: range(4) for e in c5.edges})
        with pytest.raises(ListTooSmall) as exc:
            greedy_list_strong_coloring(c5, lists, ColoringMode.degenerate())
        assert (exc.value.needed, exc.value.actual) == (5, 4)

    def test_missing_list(self, c5):
        lists = ColorLists.of({Edge(0, 1): range(5)})
        with pytest.raises(ListTooSmall) as exc:
            greedy_list_strong_coloring(c5, lists, ColoringMode.degenerate())
        assert exc.value.actual == 0

    def test_random_lists(self):
        for seed in range(30):
            g = generate(parse_gen_spec(f"random_k_degenerate:n=25,k=2,seed={seed}"))
            size = 6 * g.max_degree() - 7
            lists = random_color_lists(g, size, 3 * size, seed)
            coloring = greedy_list_strong_coloring(g, lists, ColoringMode.degenerate(2))
            assert verify_strong_coloring(g, coloring).valid
            for e, c in coloring.assignment.items():
                assert c in lists.get(e)

    def test_random_lists_deterministic(self, c5):
        a = random_color_lists(c5, 5, 15, 42)
        b = random_color_lists(c5, 5, 15, 42)
        assert a == b
        assert all(len(a.get(e)) == 5 for e in c5.edges)


class TestVerifier:
    def test_c6_three_colors(self, c6):
        cyclic = [Edge(i, (i + 1) % 6) for i in range(6)]
        coloring = EdgeColoring({e: i % 3 for i, e in enumerate(cyclic)})
        report = verify_strong_coloring(c6, coloring)
        assert report.valid
        assert report.violations == ()

    def test_c5_monochrome(self, c5):
        coloring = EdgeColoring({e: 0 for e in c5.edges})
        report = verify_strong_coloring(c5, coloring)
        assert not report.valid
        # 5 条边两两冲突，每对只报告一次
        assert len(report.violations) == 10
        assert list(report.violations) == sorted(report.violations)
        assert all(a < b for a, b in report.violations)

    def test_partial(self, c5):
        coloring = EdgeColoring({Edge(0, 1): 0, Edge(2, 3): 1})
        report = verify_strong_coloring(c5, coloring)
        assert not report.valid
        assert report.violations == ()
        assert report.uncolored == (Edge(0, 4), Edge(1, 2), Edge(3, 4))

    def test_unknown_edge(self, c5):
        with pytest.raises(UnknownEdge):
            verify_strong_coloring(c5, EdgeColoring({Edge(0, 2): 0}))

    def test_far_edges_share_color(self, two_far_edges):
        coloring = EdgeColoring({Edge(0, 1): 0, Edge(3, 4): 0})
        assert verify_strong_coloring(two_far_edges, coloring).valid

    def test_report_dict(self, p4):
        coloring = EdgeColoring({Edge(0, 1): 0, Edge(1, 2): 1, Edge(2, 3): 0})
        data = verify_strong_coloring(p4, coloring).to_dict()
        assert data['valid'] is False
        assert data['violations'] == [[[0, 1], [2, 3]]]

    def test_injective_relabel_stays_valid(self):
        for seed in range(20):
            g = generate(parse_gen_spec(f"random_k_degenerate:n=15,k=2,seed={seed}"))
            coloring = greedy_strong_coloring(g, ColoringMode.degenerate()).coloring
            colors = sorted(set(coloring.assignment.values()))
            targets = SplitMix64(seed).sample(range(10 * len(colors) + 1), len(colors))
            relabeled = coloring.recolored(dict(zip(colors, targets)))
            assert relabeled.colors_used == coloring.colors_used
            assert verify_strong_coloring(g, relabeled).valid

    def test_copying_conflicting_color_breaks_validity(self):
        checked = 0
        for seed in range(20):
            g = generate(parse_gen_spec(f"random_k_degenerate:n=15,k=2,seed={seed}"))
            coloring = greedy_strong_coloring(g, ColoringMode.degenerate()).coloring
            for e in g.sorted_edges():
                conflicts = sorted(conflict_set(g, e))
                if not conflicts:
                    continue
                f = conflicts[0]
                mutated = coloring.with_color(e, coloring.color_of(f))
                report = verify_strong_coloring(g, mutated)
                assert not report.valid
                assert (min(e, f), max(e, f)) in report.violations
                checked += 1
        assert checked > 0
