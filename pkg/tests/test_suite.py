"""
实验套件：YAML 校验、解析和运行
"""
import os
import textwrap

import pytest

from database import Database
from errors import BadSpec
from models import ColoringMode
from repositories import BenchRepository
from services import BenchService, SuiteService

SUITE_DIR = os.path.join(os.path.dirname(__file__), '..', 'data', 'suites')


def write_suite(tmp_path, text):
    path = tmp_path / "suite.yml"
    path.write_text(textwrap.dedent(text), encoding='utf-8')
    return str(path)


class TestValidate:
    @pytest.mark.parametrize("name", ["acceptance.yml", "smoke.yml"])
    def test_shipped_suites_valid(self, name):
        assert SuiteService.validate_yaml(os.path.join(SUITE_DIR, name)) == []

    def test_error_messages(self, tmp_path):
        path = write_suite(tmp_path, """
            suite:
              id: broken
            runs:
              - name: bad
                family: "cycle:5"
                count: 0
                mode: triangle
        """)
        errors = SuiteService.validate_yaml(path)
        assert any(msg.startswith("  [runs -> 0 -> count]") for msg in errors)
        assert any(msg.startswith("  [runs -> 0 -> mode]") for msg in errors)

    def test_missing_runs(self, tmp_path):
        path = write_suite(tmp_path, """
            suite:
              id: empty
        """)
        assert SuiteService.validate_yaml(path) == ["  [(root)] 'runs' is a required property"]


class TestLoadAndRun:
    def test_load(self, tmp_path):
        path = write_suite(tmp_path, """
            suite:
              id: tiny
              description: "小套件"
            runs:
              - name: c5
                family: "cycle:5"
                exact: true
              - name: trees
                family: "random_k_degenerate:n=10,k=1"
                count: 3
                seed: 4
                mode: degenerate:1
                max_edges: 12
                timeout: 5
        """)
        suite = SuiteService.load_suite(path)
        assert suite.id == "tiny"
        assert [r.name for r in suite.runs] == ["c5", "trees"]
        assert suite.runs[0].mode == ColoringMode.degenerate()
        assert suite.runs[0].count == 1
        assert suite.runs[1].mode == ColoringMode.degenerate(1)
        assert suite.runs[1].limits.max_edges == 12
        assert suite.runs[1].limits.time_budget == 5.0

    def test_load_rejects_invalid(self, tmp_path):
        path = write_suite(tmp_path, """
            suite:
              id: broken
            runs:
              - name: bad
                family: "cycle:5"
                count: -1
        """)
        with pytest.raises(BadSpec):
            SuiteService.load_suite(path)

    def test_unknown_family(self, tmp_path):
        path = write_suite(tmp_path, """
            suite:
              id: broken
            runs:
              - name: bad
                family: "hypercube:3"
        """)
        with pytest.raises(BadSpec):
            SuiteService.load_suite(path)

    def test_run_suite(self, tmp_path):
        path = write_suite(tmp_path, """
            suite:
              id: tiny
            runs:
              - name: c5
                family: "cycle:5"
                exact: true
              - name: forest
                family: "random_three_plus_forest:n=15"
                count: 4
                seed: 2
                mode: forest
        """)
        service = SuiteService(BenchService())
        result = service.run_suite(SuiteService.load_suite(path), progress=False)
        assert result.passed
        assert [name for name, _ in result.summaries] == ["c5", "forest"]
        c5_summary = result.summaries[0][1]
        assert c5_summary.rows[0].exact == 5

    def test_run_suite_saves_all_runs(self, tmp_path):
        path = write_suite(tmp_path, """
            suite:
              id: saved
            runs:
              - name: c5
                family: "cycle:5"
              - name: trees
                family: "random_k_degenerate:n=10,k=1"
                count: 3
                seed: 4
        """)
        database = Database(f"sqlite:///{tmp_path / 'suite.db'}")
        assert database.create_tables()
        session = database.get_session()
        repo = BenchRepository(session)

        service = SuiteService(BenchService(repo))
        service.run_suite(SuiteService.load_suite(path), save=True, progress=False)

        runs = repo.get_all()
        assert [r.family for r in runs] == ["cycle:n=5", "random_k_degenerate:n=10,k=1,seed=0"]
        assert [len(r.records) for r in runs] == [1, 3]
        session.close()
