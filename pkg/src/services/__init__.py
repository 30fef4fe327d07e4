"""
业务逻辑层（Service）包
"""
from .graph_io_service import (
    GRAPH6, DIMACS, EDGELIST, FORMATS,
    parse_graph, serialize_graph, detect_format, load_graph, read_source,
    serialize_coloring, parse_coloring, parse_color_lists, serialize_color_lists,
)
from .fetch_service import GraphFetchService
from .analysis_service import (
    degeneracy, conflict_set, is_three_plus_forest, is_biconnected, is_chordless,
    structure_report,
)
from .decomposition_service import (
    find_nice_vertex, find_nice_vertex_forest, build_star_sequence, check_partition,
)
from .coloring_service import (
    GreedyResult, palette_bound, bound_table, resolve_palette,
    greedy_strong_coloring, greedy_list_strong_coloring, random_color_lists,
    verify_strong_coloring,
)
from .exact_service import (
    ConflictGraph, strong_clique_lower_bound, is_strongly_colorable,
    exact_strong_chromatic_index,
)
from .generator_service import parse_gen_spec, validate_spec, generate
from .bench_service import BenchTask, BenchRow, BenchSummary, BenchService, run_instance
from .suite_service import Suite, SuiteRun, SuiteResult, SuiteService

__all__ = [
    # 图 I/O
    'GRAPH6', 'DIMACS', 'EDGELIST', 'FORMATS',
    'parse_graph', 'serialize_graph', 'detect_format', 'load_graph', 'read_source',
    'serialize_coloring', 'parse_coloring', 'parse_color_lists', 'serialize_color_lists',
    'GraphFetchService',
    # 结构分析
    'degeneracy', 'conflict_set', 'is_three_plus_forest', 'is_biconnected',
    'is_chordless', 'structure_report',
    # 分解与着色
    'find_nice_vertex', 'find_nice_vertex_forest', 'build_star_sequence', 'check_partition',
    'GreedyResult', 'palette_bound', 'bound_table', 'resolve_palette',
    'greedy_strong_coloring', 'greedy_list_strong_coloring', 'random_color_lists',
    'verify_strong_coloring',
    # 精确搜索
    'ConflictGraph', 'strong_clique_lower_bound', 'is_strongly_colorable',
    'exact_strong_chromatic_index',
    # 生成与批量实验
    'parse_gen_spec', 'validate_spec', 'generate',
    'BenchTask', 'BenchRow', 'BenchSummary', 'BenchService', 'run_instance',
    'Suite', 'SuiteRun', 'SuiteResult', 'SuiteService',
]
