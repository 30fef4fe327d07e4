"""
BenchRun 数据访问层
负责所有与 bench_runs / bench_records 表相关的数据库操作
"""
import sys

from sqlalchemy.exc import SQLAlchemyError

from models import BenchRun


class BenchRepository:
    """BenchRun 数据访问类"""

    def __init__(self, session):
        """
        Args:
            session: SQLAlchemy 数据库会话
        """
        self.session = session

    def save(self, run):
        """
        保存一次实验（连同其 records）

        Returns:
            bool: 是否保存成功
        """
        try:
            self.session.add(run)
            self.session.commit()
            return True
        except SQLAlchemyError as e:
            self.session.rollback()
            print(f"✗ 保存实验失败 {run.family}: {e}", file=sys.stderr)
            return False

    def save_batch(self, runs):
        """
        批量保存

        Returns:
            tuple: (成功数量, 失败数量)
        """
        try:
            self.session.add_all(runs)
            self.session.commit()
            return len(runs), 0
        except SQLAlchemyError as e:
            self.session.rollback()
            print(f"✗ 批量提交失败: {e}", file=sys.stderr)
            return 0, len(runs)

    def get_by_id(self, run_id):
        return self.session.get(BenchRun, run_id)

    def get_all(self):
        return self.session.query(BenchRun).order_by(BenchRun.id).all()

    def latest(self, limit=10):
        """最近的若干次实验，新的在前"""
        return self.session.query(BenchRun).order_by(BenchRun.id.desc()).limit(limit).all()

    def count(self):
        return self.session.query(BenchRun).count()
