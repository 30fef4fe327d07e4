"""
StarDecomposition 数据模型
Λ 星序列：每一步是以 center 为中心的一颗星，所有步骤的边集划分 E(G)
"""
from dataclasses import dataclass, field
from typing import List, Tuple

from .coloring_mode import ColoringMode
from .graph import Edge


@dataclass(frozen=True)
class StarStep:
    """序列中的一步（下标从 1 开始）"""

    index: int
    center: int
    star_edges: Tuple[Edge, ...]

    def leaves(self):
        """非中心端点，按升序"""
        return [e.other(self.center) for e in self.star_edges]

    def to_line(self):
        """trace 行格式: "i center: v1 v2 ..." """
        return f"{self.index} {self.center}: " + ' '.join(str(v) for v in self.leaves())


@dataclass(frozen=True)
class StarDecomposition:
    """有序星序列 Λ1 ... Λm"""

    mode: ColoringMode
    steps: Tuple[StarStep, ...] = field(default_factory=tuple)

    @property
    def m(self):
        return len(self.steps)

    def centers(self):
        return [s.center for s in self.steps]

    def all_edges(self) -> List[Edge]:
        return [e for s in self.steps for e in s.star_edges]

    def to_trace(self):
        """序列化为文本 trace，每步一行"""
        return ''.join(s.to_line() + '\n' for s in self.steps)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)
