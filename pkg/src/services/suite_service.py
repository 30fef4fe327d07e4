"""
实验套件服务
从 YAML 文件读取一组 bench 运行配置，校验后依次执行
"""
import json
import os
import sys
from dataclasses import dataclass, field
from typing import List

import yaml
from jsonschema import Draft7Validator

from errors import BadSpec
from models import SearchLimits
from utils import parse_mode
from .generator_service import parse_gen_spec

# JSON Schema 文件路径
_SCHEMA_PATH = os.path.join(
    os.path.dirname(__file__), '..', '..', 'data', 'suites', 'schema.json'
)
_SCHEMA = None


def _load_schema():
    """加载 JSON Schema（只加载一次）"""
    with open(_SCHEMA_PATH, 'r', encoding='utf-8') as f:
        return json.load(f)


@dataclass(frozen=True)
class SuiteRun:
    """套件中的一次 bench 运行"""

    name: str
    spec: object
    count: int
    seed: int
    mode: object
    lists: bool = False
    exact: bool = False
    limits: SearchLimits = field(default_factory=SearchLimits)


@dataclass(frozen=True)
class Suite:
    id: str
    description: str
    runs: tuple


@dataclass
class SuiteResult:
    suite: Suite
    summaries: List[tuple] = field(default_factory=list)  # [(run name, BenchSummary), ...]

    @property
    def violations(self):
        return sum(s.violations for _, s in self.summaries)

    @property
    def passed(self):
        return self.violations == 0


class SuiteService:
    """套件读取与执行"""

    @staticmethod
    def validate_yaml(yaml_path):
        """
        校验一个套件 YAML 文件是否符合 schema。

        Args:
            yaml_path: YAML 文件路径

        Returns:
            list[str]: 校验错误列表，空列表表示通过

        Raises:
            FileNotFoundError: YAML 或 schema 文件不存在
        """
        global _SCHEMA
        if _SCHEMA is None:
            _SCHEMA = _load_schema()

        with open(yaml_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)

        validator = Draft7Validator(_SCHEMA)
        errors = sorted(validator.iter_errors(data), key=lambda e: list(e.path))

        messages = []
        for err in errors:
            path = ' -> '.join(str(p) for p in err.absolute_path) or '(root)'
            messages.append(f"  [{path}] {err.message}")

        return messages

    @staticmethod
    def load_suite(yaml_path):
        """
        读取并解析套件文件

        Returns:
            Suite

        Raises:
            BadSpec: schema 校验失败，或 family / mode 字符串无法解析
        """
        errors = SuiteService.validate_yaml(yaml_path)
        if errors:
            error_msg = '\n'.join(errors)
            raise BadSpec(f"suite file failed validation: {yaml_path}\n{error_msg}")

        with open(yaml_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)

        suite_data = data['suite']
        runs = []
        for item in data['runs']:
            try:
                mode = parse_mode(item.get('mode', 'degenerate:auto'))
            except ValueError as e:
                raise BadSpec(f"run {item['name']}: {e}")
            runs.append(SuiteRun(
                name=item['name'],
                spec=parse_gen_spec(item['family']),
                count=item.get('count', 1),
                seed=item.get('seed', 0),
                mode=mode,
                lists=item.get('lists', False),
                exact=item.get('exact', False),
                limits=SearchLimits(
                    max_edges=item.get('max_edges', 30),
                    time_budget=float(item.get('timeout', 60)),
                ),
            ))

        return Suite(
            id=suite_data['id'],
            description=suite_data.get('description', ''),
            runs=tuple(runs),
        )

    def __init__(self, bench_service):
        """
        Args:
            bench_service: BenchService（决定是否保存结果）
        """
        self.bench_service = bench_service

    def run_suite(self, suite, save=False, workers=1, progress=None):
        """
        依次执行套件中的所有运行

        Returns:
            SuiteResult
        """
        result = SuiteResult(suite=suite)
        print(f"\n{'=' * 60}", file=sys.stderr)
        print(f"套件: {suite.id} ({len(suite.runs)} 个运行)", file=sys.stderr)
        print('=' * 60, file=sys.stderr)

        for run in suite.runs:
            summary = self.bench_service.run(
                run.spec, run.count, run.seed, run.mode,
                lists=run.lists, exact=run.exact, limits=run.limits,
                workers=workers, progress=progress,
            )
            result.summaries.append((run.name, summary))
            marker = '✓' if summary.violations == 0 else '✗'
            print(f"{marker} {run.name}: {run.spec} x{run.count} "
                  f"violations={summary.violations} max_colors_used={summary.max_colors_used}",
                  file=sys.stderr)
        if save:
            self.bench_service.save_all([summary for _, summary in result.summaries])

        return result
