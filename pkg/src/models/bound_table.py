"""
BoundTable 数据模型
各文献上界公式在 (k, Δ) 处的取值
"""
from dataclasses import dataclass, field
from typing import Dict, Optional


@dataclass(frozen=True)
class BoundTable:
    """
    上界表

    entries: 文献公式名 -> 取值（仅 k=2 时包含与 k 无关的 2-退化图公式）
    conjecture: Erdős–Nešetřil 猜想值（只作对照，不是已证明的上界）
    trivial: 平凡贪心上界 2Δ(Δ-1)+1
    chordless_cn: 无弦图的 8Δ-6（仅 k=2 时给出）
    """

    k: int
    delta: int
    entries: Dict[str, int] = field(default_factory=dict)
    conjecture: int = 0
    trivial: int = 0
    chordless_cn: Optional[int] = None

    def best(self):
        """已证明的最小上界"""
        return min(self.entries.values())

    def to_dict(self):
        return {
            'k': self.k,
            'delta': self.delta,
            'entries': dict(self.entries),
            'conjecture': self.conjecture,
            'trivial': self.trivial,
            'chordless_cn': self.chordless_cn,
        }
