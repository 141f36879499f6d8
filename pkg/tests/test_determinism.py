"""Tests that every command prints identical output on repeated runs"""

import pytest

from quasisoft_cli.algebra.fixtures import list_fixtures
from quasisoft_cli.main import app
from tests.conftest import runner

TABLES = [f.name for f in list_fixtures() if f.kind == "table"]
SOFT_SETS = [(f.name, f.table_name) for f in list_fixtures() if f.kind == "softset"]

HEAVY = {("suite", "z9-medial"), ("iso", "z9-medial")}


def table_commands() -> list:
    cases = []
    for table in TABLES:
        for args in (
            ["validate", table],
            ["parastrophe", table, "--all"],
            ["subs", table],
            ["congruences", table],
            ["iso", table, table],
            ["suite", table],
        ):
            marks = [pytest.mark.slow] if (args[0], table) in HEAVY else []
            cases.append(pytest.param(args, marks=marks, id=" ".join(args)))
    return cases


def soft_commands() -> list:
    cases = []
    for soft, table in SOFT_SETS:
        for args in (
            ["soft", "check", table, soft],
            ["soft", "metrics", table, soft],
            ["soft", "compare", table, soft, soft],
            ["cosets", table, soft],
            ["suite", table, soft],
        ):
            cases.append(pytest.param(args, id=" ".join(args)))
    return cases


OTHER_COMMANDS = [
    pytest.param(["fixtures"], id="fixtures"),
    pytest.param(["quotient", "s3", "--subset", "123 231 312"], id="quotient s3"),
    pytest.param(["quotient", "z3-medial", "--subset", "0"], id="quotient z3-medial"),
]


@pytest.fixture(autouse=True)
def timeless_logs(mocker):
    mocker.patch("quasisoft_cli.main.LOG_FORMAT", "%(name)s - %(levelname)s - %(message)s")


@pytest.fixture(params=[[], ["--json"]], ids=["text", "json"])
def output_flags(request):
    return request.param


def run_twice(args: list[str]):
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code in (0, 1), first.output
    assert "Unexpected error" not in first.output
    return first, second


class TestRepeatedRuns:
    """Run each command twice on every built-in fixture"""

    def test_registry_covers_both_kinds(self):
        """Test that the fixture lists are not empty"""
        assert "q6" in TABLES and "z9-medial" in TABLES
        assert ("q6-tower", "q6") in SOFT_SETS

    @pytest.mark.parametrize("args", table_commands())
    def test_table_commands(self, args, output_flags):
        """Test identical output and exit code for table commands"""
        first, second = run_twice(args + output_flags)
        assert first.exit_code == second.exit_code
        assert first.output == second.output

    @pytest.mark.parametrize("args", soft_commands())
    def test_soft_commands(self, args, output_flags):
        """Test identical output and exit code for soft-set commands"""
        first, second = run_twice(args + output_flags)
        assert first.exit_code == second.exit_code
        assert first.output == second.output

    @pytest.mark.parametrize("args", OTHER_COMMANDS)
    def test_other_commands(self, args, output_flags):
        """Test identical output for the fixture listing and quotients"""
        first, second = run_twice(args + output_flags)
        assert first.exit_code == second.exit_code
        assert first.output == second.output
