"""Tests for --json output of CLI commands"""

from quasisoft_cli.main import app
from tests.conftest import parse_json_output, runner


def entries(data: dict, title: str) -> dict[str, str]:
    section = next(s for s in data["sections"] if s["title"] == title)
    return {e["key"]: e["value"] for e in section["entries"]}


def test_validate_json():
    """Test the JSON form of a passing validation"""
    result = runner.invoke(app, ["validate", "q6", "--json"])
    assert result.exit_code == 0
    data = parse_json_output(result.output)
    assert data["status"] == "pass"
    assert entries(data, "table")["order"] == "6"
    assert entries(data, "properties")["is_commutative"] == "false"
    assert data["counterexamples"] == []


def test_validate_json_defects():
    """Test that each defect becomes a counterexample with its witness"""
    result = runner.invoke(app, ["validate", "q8-printed", "--json"])
    assert result.exit_code == 1
    data = parse_json_output(result.output)
    assert data["status"] == "invalid-input"
    assert len(data["counterexamples"]) == 2
    witness = data["counterexamples"][0]["witness"]
    assert witness["axis"] == "column"
    assert witness["index"] == "5"
    assert witness["positions"] == "6 8"
    assert witness["missing"] == "1"


def test_parastrophe_json_tables():
    """Test that derived tables are carried as rows of symbols"""
    result = runner.invoke(app, ["parastrophe", "z3-medial", "--all", "--json"])
    assert result.exit_code == 0
    data = parse_json_output(result.output)
    assert len(data["tables"]) == 6
    assert data["tables"][0]["header"] == ["0", "1", "2"]
    assert entries(data, "parastrophe classes") == {"class 1": "mul opp rdiv ldiv ordiv oldiv"}


def test_soft_metrics_json():
    """Test exact and decimal means"""
    result = runner.invoke(app, ["soft", "metrics", "q8", "q8-large", "--json"])
    assert result.exit_code == 0
    values = entries(parse_json_output(result.output), "metrics")
    assert values["order_raw"] == "18"
    assert values["order_distinct_proper"] == "6"
    assert values["am"] == "9/2"
    assert values["gm"] == "4"


def test_iso_json_failure():
    """Test a failed isomorphism search"""
    result = runner.invoke(app, ["iso", "z4", "z2xz2", "--json"])
    assert result.exit_code == 1
    data = parse_json_output(result.output)
    assert data["status"] == "fail"
    assert data["counterexamples"][0]["message"] == "no isomorphism exists"


def test_fixtures_json():
    """Test the fixture listing"""
    result = runner.invoke(app, ["fixtures", "--json"])
    assert result.exit_code == 0
    tables = entries(parse_json_output(result.output), "tables")
    assert "q8-printed" in tables
    assert "s3" in tables
