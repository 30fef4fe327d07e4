"""
数据库连接管理
bench / suite 的结果持久化使用；连接 URL 来自环境变量（见 utils/env_utils.py）
"""
import sys

from sqlalchemy import create_engine, text, inspect
from sqlalchemy.orm import sessionmaker

from models import Base
from utils import database_url


class Database:
    """数据库连接管理类"""

    def __init__(self, url=None):
        self.url = url or database_url()
        self.engine = None
        self.Session = None
        self._init_engine()

    def _init_engine(self):
        """初始化数据库引擎"""
        self.engine = create_engine(
            self.url,
            pool_pre_ping=True,      # 连接前先 ping，确保连接有效
            pool_recycle=3600,       # 1小时后回收连接
            echo=False,              # 设置为 True 可以看到所有 SQL 语句（调试用）
        )
        self.Session = sessionmaker(bind=self.engine)

    def test_connection(self):
        """测试数据库连接"""
        try:
            with self.engine.connect() as connection:
                connection.execute(text("SELECT 1"))
            print(f"✓ 数据库连接成功！({self.engine.dialect.name})", file=sys.stderr)
            return True
        except Exception as e:
            print(f"✗ 数据库连接失败: {e}", file=sys.stderr)
            return False

    def create_tables(self):
        """创建所有数据表（仅创建不存在的表）"""
        try:
            Base.metadata.create_all(self.engine)
            existing_tables = inspect(self.engine).get_table_names()
            expected_tables = [t.name for t in Base.metadata.sorted_tables]
            missing = [t for t in expected_tables if t not in existing_tables]
            if missing:
                print(f"⚠️ 以下表未创建成功: {missing}", file=sys.stderr)
                return False
            return True
        except Exception as e:
            print(f"✗ 创建数据表失败: {e}", file=sys.stderr)
            return False

    def get_session(self):
        """获取数据库会话"""
        return self.Session()
