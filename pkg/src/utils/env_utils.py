"""
环境变量配置
从 .env 文件和进程环境读取配置
"""
import os

from dotenv import load_dotenv

# 加载 .env 文件中的环境变量（已存在的环境变量优先）
load_dotenv()

DEFAULT_SQLITE_URL = "sqlite:///strongedge.db"


def default_seed(fallback=0):
    """
    STRONGEDGE_SEED 覆盖 --seed 的默认值

    Raises:
        ValueError: STRONGEDGE_SEED 不是整数
    """
    raw = os.getenv('STRONGEDGE_SEED')
    if raw is None or raw.strip() == '':
        return fallback
    try:
        return int(raw.strip(), 0)
    except ValueError:
        raise ValueError(f"STRONGEDGE_SEED must be an integer, got {raw!r}")


def database_url():
    """
    数据库连接 URL

    优先级：STRONGEDGE_DB_URL > DB_HOST 等 MySQL 配置 > 本地 SQLite
    """
    url = os.getenv('STRONGEDGE_DB_URL')
    if url:
        return url

    db_host = os.getenv('DB_HOST')
    db_port = os.getenv('DB_PORT', '3306')
    db_name = os.getenv('DB_NAME')
    db_user = os.getenv('DB_USER')
    db_password = os.getenv('DB_PASSWORD')

    if all([db_host, db_name, db_user, db_password]):
        return f"mysql+pymysql://{db_user}:{db_password}@{db_host}:{db_port}/{db_name}"

    return DEFAULT_SQLITE_URL
