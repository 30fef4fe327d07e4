"""
数据访问层（Repository）包
"""
from .bench_repository import BenchRepository

__all__ = ['BenchRepository']
