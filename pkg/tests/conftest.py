"""
pytest 公共配置和小图 fixture
"""
import os
import sys

import pytest

# 添加 src 目录到 Python 路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from models import build_graph  # noqa: E402

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


def read_golden(name):
    with open(os.path.join(GOLDEN_DIR, name), 'r', encoding='ascii') as f:
        return f.read()


@pytest.fixture
def c5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def c6():
    return build_graph(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def p3():
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def p4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k4():
    return build_graph(4, [(i, j) for j in range(4) for i in range(j)])


@pytest.fixture
def star4():
    return build_graph(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def two_far_edges():
    return build_graph(5, [(0, 1), (3, 4)])
