"""
着色相关数据模型
EdgeColoring / Palette / ColorLists / ColoringReport
"""
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Optional, Tuple

from .coloring_mode import ColoringMode
from .graph import Edge


class EdgeColoring:
    """
    边到颜色编号（非负整数）的映射，可以是部分着色

    构造后不可变；colors_used 为实际出现的不同颜色数
    """

    __slots__ = ('_assignment',)

    def __init__(self, assignment=None):
        self._assignment = MappingProxyType(dict(assignment or {}))

    @property
    def assignment(self):
        return self._assignment

    @property
    def colors_used(self):
        return len(set(self._assignment.values()))

    def color_of(self, edge):
        return self._assignment.get(edge)

    def sorted_items(self):
        return sorted(self._assignment.items())

    def recolored(self, mapping):
        """按 mapping（旧颜色 -> 新颜色）重新编号"""
        return EdgeColoring({e: mapping[c] for e, c in self._assignment.items()})

    def with_color(self, edge, color):
        """返回修改了一条边颜色的新着色"""
        assignment = dict(self._assignment)
        assignment[edge] = color
        return EdgeColoring(assignment)

    def __len__(self):
        return len(self._assignment)

    def __contains__(self, edge):
        return edge in self._assignment

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return dict(self._assignment) == dict(other._assignment)

    def __repr__(self):
        return f"<EdgeColoring edges={len(self._assignment)} colors={self.colors_used}>"


@dataclass(frozen=True)
class Palette:
    """调色板：颜色编号取自 [0, size)"""

    size: int
    mode: ColoringMode
    k: Optional[int] = None
    delta: int = 0


@dataclass(frozen=True)
class ColorLists:
    """每条边允许使用的颜色集合（列表着色）"""

    lists: MappingProxyType = field(default_factory=lambda: MappingProxyType({}))

    @classmethod
    def of(cls, mapping):
        return cls(MappingProxyType({e: frozenset(c) for e, c in mapping.items()}))

    def get(self, edge):
        return self.lists.get(edge)

    def __len__(self):
        return len(self.lists)


@dataclass(frozen=True)
class ColoringReport:
    """验证结果：valid 当且仅当没有冲突且没有未着色的边"""

    valid: bool
    violations: Tuple[Tuple[Edge, Edge], ...] = ()
    uncolored: Tuple[Edge, ...] = ()

    def to_dict(self):
        return {
            'valid': self.valid,
            'violations': [[[a.u, a.v], [b.u, b.v]] for a, b in self.violations],
            'uncolored': [[e.u, e.v] for e in self.uncolored],
        }
