"""
ColoringMode 数据模型
分解 / 着色模式：degenerate(k 或 auto) 或 forest
"""
from dataclasses import dataclass
from typing import Optional

DEGENERATE = 'degenerate'
FOREST = 'forest'


@dataclass(frozen=True)
class ColoringMode:
    """
    着色模式

    kind: 'degenerate' 或 'forest'
    k: degenerate 模式下的 k；None 表示 auto（取图的退化度）
    """

    kind: str
    k: Optional[int] = None

    @classmethod
    def degenerate(cls, k=None):
        return cls(DEGENERATE, k)

    @classmethod
    def forest(cls):
        return cls(FOREST, None)

    @property
    def is_forest(self):
        return self.kind == FOREST

    @property
    def is_auto(self):
        return self.kind == DEGENERATE and self.k is None

    def with_k(self, k):
        """返回确定了 k 的 degenerate 模式"""
        return ColoringMode(DEGENERATE, k)

    def __str__(self):
        if self.kind == FOREST:
            return FOREST
        return f"{DEGENERATE}:{'auto' if self.k is None else self.k}"
