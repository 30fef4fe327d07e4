"""
工具函数模块
"""
from .mode_utils import parse_mode, validate_mode
from .prng import SplitMix64, derive_seeds
from .env_utils import default_seed, database_url

__all__ = [
    'parse_mode',
    'validate_mode',
    'SplitMix64',
    'derive_seeds',
    'default_seed',
    'database_url',
]
