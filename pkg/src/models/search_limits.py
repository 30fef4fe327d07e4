"""
SearchLimits 数据模型
精确搜索的规模和时间限制
"""
from dataclasses import dataclass

from errors import PreconditionViolated


@dataclass(frozen=True)
class SearchLimits:
    max_edges: int = 30
    time_budget: float = 60.0  # 秒，单次调用的墙钟时间

    def __post_init__(self):
        if self.max_edges < 1:
            raise PreconditionViolated(f"max_edges must be >= 1, got {self.max_edges}")
        if self.time_budget <= 0:
            raise PreconditionViolated(f"time_budget must be > 0, got {self.time_budget}")
