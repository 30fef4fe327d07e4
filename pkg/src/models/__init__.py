"""
数据模型包
"""
from sqlalchemy.orm import declarative_base

# 创建 ORM 基类
Base = declarative_base()

# 导出所有模型：图与着色
from .graph import Edge, Graph, build_graph
from .structure_report import StructureReport
from .coloring_mode import ColoringMode, DEGENERATE, FOREST
from .star_decomposition import StarStep, StarDecomposition
from .edge_coloring import EdgeColoring, Palette, ColorLists, ColoringReport
from .bound_table import BoundTable
from .search_limits import SearchLimits
from .gen_spec import GenSpec, KIND_PARAMS, RANDOM_KINDS

# 导出所有模型：实验结果持久化
from .bench_run import BenchRun
from .bench_record import BenchRecord

__all__ = [
    'Base',
    # 图与着色
    'Edge',
    'Graph',
    'build_graph',
    'StructureReport',
    'ColoringMode',
    'DEGENERATE',
    'FOREST',
    'StarStep',
    'StarDecomposition',
    'EdgeColoring',
    'Palette',
    'ColorLists',
    'ColoringReport',
    'BoundTable',
    'SearchLimits',
    'GenSpec',
    'KIND_PARAMS',
    'RANDOM_KINDS',
    # 实验结果持久化
    'BenchRun',
    'BenchRecord',
]
