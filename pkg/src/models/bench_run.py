"""
BenchRun 数据模型
一次批量实验（bench / suite）的元数据
"""
from sqlalchemy import Column, String, Integer, BigInteger, Boolean, DateTime
from sqlalchemy.orm import relationship
from datetime import datetime
from . import Base


class BenchRun(Base):
    """批量实验表"""
    __tablename__ = 'bench_runs'

    # 主键：自增ID
    id = Column(Integer, primary_key=True, autoincrement=True)

    # 实验参数
    family = Column(String(255), nullable=False, index=True)  # "random_k_degenerate:n=30,k=2"
    mode = Column(String(50), nullable=False)                 # "degenerate:auto" / "forest"
    seed = Column(BigInteger, nullable=False)
    count = Column(Integer, nullable=False)
    list_mode = Column(Boolean, nullable=False, default=False)

    # 汇总结果
    violations = Column(Integer, nullable=False, default=0)
    max_colors_used = Column(Integer, nullable=False, default=0)

    # 时间戳
    created_at = Column(DateTime, default=datetime.now, nullable=False)

    # 关系：一对多 → BenchRecord
    records = relationship(
        "BenchRecord",
        back_populates="run",
        cascade="all, delete-orphan",
        order_by="BenchRecord.instance_index"
    )

    def __repr__(self):
        return f"<BenchRun {self.id}: {self.family} x{self.count}>"

    def __str__(self):
        status = "✓" if self.violations == 0 else "✗"
        return f"{status} #{self.id} {self.family} [{self.mode}] count={self.count} violations={self.violations}"
