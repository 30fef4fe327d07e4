"""
GenSpec 数据模型
图族生成参数，如 cycle(5)、c5_blowup(2)、random_k_degenerate(n=30, k=2)
"""
from dataclasses import dataclass, field, replace
from typing import Dict

# 各图族需要的参数名（按位置顺序）
KIND_PARAMS = {
    'cycle': ('n',),
    'corona_cycle': ('n',),
    'c5_blowup': ('t',),
    'double_star': ('a', 'b'),
    'theta': ('a', 'b', 'c'),
    'path': ('n',),
    'star': ('n',),
    'complete': ('n',),
    'random_k_degenerate': ('n', 'k'),
    'random_three_plus_forest': ('n',),
}

RANDOM_KINDS = frozenset({'random_k_degenerate', 'random_three_plus_forest'})


@dataclass(frozen=True)
class GenSpec:
    """生成规格；seed 只对随机图族生效"""

    kind: str
    params: Dict[str, int] = field(default_factory=dict)
    seed: int = 0

    @property
    def is_random(self):
        return self.kind in RANDOM_KINDS

    def with_seed(self, seed):
        return replace(self, seed=seed)

    def __str__(self):
        parts = [f"{name}={self.params[name]}" for name in KIND_PARAMS.get(self.kind, ()) if name in self.params]
        if self.is_random:
            parts.append(f"seed={self.seed}")
        return f"{self.kind}:{','.join(parts)}"
