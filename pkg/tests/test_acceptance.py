"""
端到端复现：上界、紧性、列表版本、精确值对照、反例回归、格式往返
"""
import time

import pytest

from errors import NoNiceVertex
from models import ColoringMode, SearchLimits
from services import (
    greedy_strong_coloring, greedy_list_strong_coloring, random_color_lists,
    verify_strong_coloring, exact_strong_chromatic_index, strong_clique_lower_bound,
    build_star_sequence, check_partition, find_nice_vertex_forest, structure_report,
    parse_graph, serialize_graph, generate, parse_gen_spec,
    GRAPH6, DIMACS, EDGELIST,
)
from utils import derive_seeds


def random_instances(family, count, seed):
    """按 bench 的方式派生实例 seed"""
    spec = parse_gen_spec(family)
    return [generate(spec.with_seed(s)) for s in derive_seeds(seed, count)]


def assert_decomposition_sound(g, mode):
    decomposition = build_star_sequence(g, mode)
    check_partition(g, decomposition)
    centers = decomposition.centers()
    assert len(centers) == len(set(centers))


def test_c5_tightness():
    started = time.monotonic()
    g = generate(parse_gen_spec("cycle:5"))
    result = greedy_strong_coloring(g, ColoringMode.degenerate())
    assert verify_strong_coloring(g, result.coloring).valid
    assert result.coloring.colors_used == 5
    chi, _ = exact_strong_chromatic_index(g)
    assert chi == 5 == 6 * g.max_degree() - 7
    assert_decomposition_sound(g, ColoringMode.degenerate())
    assert time.monotonic() - started < 1.0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_k_degenerate_bound(k):
    # 三个 k 合计 500 个实例
    count = {1: 166, 2: 167, 3: 167}[k]
    for i, seed in enumerate(derive_seeds(k, count)):
        n = 10 + 10 * (i % 4)
        g = generate(parse_gen_spec(f"random_k_degenerate:n={n},k={k},seed={seed}"))
        result = greedy_strong_coloring(g, ColoringMode.degenerate(k))
        assert verify_strong_coloring(g, result.coloring).valid
        assert result.coloring.colors_used <= (4 * k - 2) * g.max_degree() - 2 * k * k + 1
        assert_decomposition_sound(g, ColoringMode.degenerate(k))


def test_tree_bound():
    for g in random_instances("random_k_degenerate:n=30,k=1", 100, 17):
        result = greedy_strong_coloring(g, ColoringMode.degenerate(1))
        assert verify_strong_coloring(g, result.coloring).valid
        assert result.coloring.colors_used <= 2 * g.max_degree() - 1
        assert_decomposition_sound(g, ColoringMode.degenerate(1))

    for a in (1, 2, 3):
        g = generate(parse_gen_spec(f"double_star:{a},{a}"))
        chi, _ = exact_strong_chromatic_index(g)
        assert chi == 2 * g.max_degree() - 1 == 2 * a + 1


def test_forest_variant_bound():
    graphs = random_instances("random_three_plus_forest:n=30", 200, 23)
    graphs += [generate(parse_gen_spec(s)) for s in ("theta:2,2,2", "theta:2,3,4", "theta:3,3,5", "cycle:7")]
    for g in graphs:
        result = greedy_strong_coloring(g, ColoringMode.forest())
        assert verify_strong_coloring(g, result.coloring).valid
        assert result.coloring.colors_used <= 4 * g.max_degree() - 3
        assert_decomposition_sound(g, ColoringMode.forest())

    c5 = generate(parse_gen_spec("cycle:5"))
    assert greedy_strong_coloring(c5, ColoringMode.forest()).coloring.colors_used == 5 == 4 * 2 - 3


def test_minimally_two_connected_instances_use_forest_mode():
    for spec in ("theta:2,2,2", "theta:2,3,4", "cycle:6"):
        g = generate(parse_gen_spec(spec))
        report = structure_report(g)
        assert report.minimally_two_connected
        assert report.three_plus_forest


def test_c5_blowup():
    assert exact_strong_chromatic_index(generate(parse_gen_spec("c5_blowup:1")))[0] == 5
    started = time.monotonic()
    g = generate(parse_gen_spec("c5_blowup:2"))
    chi, _ = exact_strong_chromatic_index(g)
    assert chi == 20 == 5 * g.max_degree() ** 2 // 4
    assert time.monotonic() - started < 60.0


def test_list_version():
    for seed, g in zip(derive_seeds(31, 200), random_instances("random_k_degenerate:n=30,k=2", 200, 31)):
        size = 6 * g.max_degree() - 7
        lists = random_color_lists(g, size, 3 * size, seed)
        coloring = greedy_list_strong_coloring(g, lists, ColoringMode.degenerate(2))
        report = verify_strong_coloring(g, coloring)
        assert report.valid
        assert len(coloring) == g.m


def test_oracle_sandwich():
    limits = SearchLimits(max_edges=30, time_budget=30)
    for g in random_instances("random_k_degenerate:n=10,k=2", 100, 41):
        assert g.m <= 30
        result = greedy_strong_coloring(g, ColoringMode.degenerate())
        chi, witness = exact_strong_chromatic_index(g, limits)
        assert verify_strong_coloring(g, witness).valid
        assert strong_clique_lower_bound(g) <= chi <= result.coloring.colors_used <= result.palette.size


@pytest.mark.parametrize("n", [3, 4, 5])
def test_corona_counterexample(n):
    g = generate(parse_gen_spec(f"corona_cycle:{n}"))
    report = structure_report(g)
    assert report.three_plus_forest is False
    with pytest.raises(NoNiceVertex):
        find_nice_vertex_forest(g)


def test_parser_round_trip():
    graphs = []
    graphs += random_instances("random_k_degenerate:n=25,k=3", 80, 51)
    graphs += random_instances("random_three_plus_forest:n=40", 60, 52)
    graphs += [generate(parse_gen_spec(f"cycle:{n}")) for n in range(3, 23)]
    graphs += [generate(parse_gen_spec(f"complete:{n}")) for n in range(1, 21)]
    graphs += [generate(parse_gen_spec(f"star:{n}")) for n in range(1, 21)]
    assert len(graphs) == 200

    for g in graphs:
        canonical = serialize_graph(g, GRAPH6)
        assert parse_graph(canonical, GRAPH6) == g
        assert serialize_graph(parse_graph(canonical, GRAPH6), GRAPH6) == canonical
        for fmt in (DIMACS, EDGELIST):
            data = serialize_graph(g, fmt)
            assert parse_graph(data, fmt) == g
            assert serialize_graph(parse_graph(data, fmt), fmt) == data
