"""
StructureReport 数据模型
图的结构检查结果（退化度、度数、3+ 点森林、双连通、无弦）
"""
from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class StructureReport:
    """结构检查报告"""

    n: int
    m: int
    degeneracy: int
    max_degree: int
    min_degree: int
    three_plus_forest: bool
    biconnected: bool
    chordless: bool
    minimally_two_connected: bool

    def to_dict(self):
        return asdict(self)

    def to_lines(self):
        """文本输出：每行 "key: value" """
        lines = []
        for key, value in asdict(self).items():
            if isinstance(value, bool):
                value = str(value).lower()
            lines.append(f"{key}: {value}")
        return lines
