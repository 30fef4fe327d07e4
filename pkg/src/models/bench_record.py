"""
BenchRecord 数据模型
批量实验中单个实例的结果
"""
from sqlalchemy import Column, Integer, BigInteger, Boolean, ForeignKey, UniqueConstraint
from sqlalchemy.orm import relationship
from . import Base


class BenchRecord(Base):
    """实例结果表"""
    __tablename__ = 'bench_records'

    id = Column(Integer, primary_key=True, autoincrement=True)

    # 外键：所属实验
    run_id = Column(Integer, ForeignKey('bench_runs.id', ondelete='CASCADE'), nullable=False, index=True)

    instance_index = Column(Integer, nullable=False)
    seed = Column(BigInteger, nullable=False)

    # 图参数
    n = Column(Integer, nullable=False)
    m = Column(Integer, nullable=False)
    delta = Column(Integer, nullable=False)
    k = Column(Integer, nullable=True)  # forest 模式下为空

    # 着色结果
    bound = Column(Integer, nullable=False)
    colors_used = Column(Integer, nullable=False)
    valid = Column(Boolean, nullable=False)
    exact = Column(Integer, nullable=True)  # 未运行精确搜索或超时为空

    run = relationship("BenchRun", back_populates="records")

    __table_args__ = (
        UniqueConstraint('run_id', 'instance_index', name='uq_run_instance'),
    )

    def __repr__(self):
        return f"<BenchRecord run={self.run_id} #{self.instance_index}: {self.colors_used}/{self.bound}>"
