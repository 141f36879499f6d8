"""Tests for CLI commands"""

import pytest

from quasisoft_cli.main import app
from tests.conftest import load, runner


@pytest.fixture
def soft_file(tmp_path):
    def write(text: str) -> str:
        path = tmp_path / "soft.txt"
        path.write_text(text)
        return str(path)

    return write


class TestValidate:
    """Test the validate command"""

    def test_valid_table(self):
        """Test a valid non-loop quasigroup"""
        result = runner.invoke(app, ["validate", "q6"])
        assert result.exit_code == 0
        assert "status = pass" in result.output
        assert "latin = true" in result.output
        assert "is_loop = false" in result.output
        assert "identity = none" in result.output

    def test_printed_table_lists_defects(self):
        """Test that every repeated symbol is reported"""
        result = runner.invoke(app, ["validate", "q8-printed"])
        assert result.exit_code == 1
        assert "status = invalid-input" in result.output
        assert "latin = false" in result.output
        assert "column 5: symbol 4 repeated at 6, 8; missing 1" in result.output
        assert "column 8: symbol 1 repeated at 6, 8; missing 4" in result.output

    def test_table_file(self, tmp_path):
        """Test a table given by path"""
        path = tmp_path / "z2.txt"
        path.write_text("# Z_2\na b\na b\nb a\n")
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == 0
        assert "identity = a" in result.output
        assert "is_group = true" in result.output

    def test_ragged_file(self, tmp_path):
        """Test a malformed table file"""
        path = tmp_path / "bad.txt"
        path.write_text("a b\na\nb a\n")
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == 2
        assert "Input error: line 2: ragged row" in result.output


class TestParastrophe:
    """Test the parastrophe command"""

    def test_needs_kind_or_all(self):
        """Test the usage error without options"""
        result = runner.invoke(app, ["parastrophe", "q6"])
        assert result.exit_code == 2
        assert "Give --kind KIND or --all." in result.output

    def test_single_kind(self):
        """Test one derived table"""
        result = runner.invoke(app, ["parastrophe", "q6", "--kind", "ldiv"])
        assert result.exit_code == 0
        assert "[parastrophe ldiv]" in result.output
        assert "op_kind = ldiv" in result.output

    def test_all_kinds_on_z4(self):
        """Test coincidence classes of a commutative group"""
        result = runner.invoke(app, ["parastrophe", "z4", "--all"])
        assert result.exit_code == 0
        assert "class 1 = mul opp" in result.output
        assert "class 2 = rdiv oldiv" in result.output
        assert "class 3 = ldiv ordiv" in result.output

    def test_invalid_kind(self):
        """Test that an unknown kind is refused by the option parser"""
        result = runner.invoke(app, ["parastrophe", "q6", "--kind", "div"])
        assert result.exit_code == 2


class TestSubs:
    """Test the subs command"""

    def test_q6(self):
        """Test the four subquasigroups of q6"""
        result = runner.invoke(app, ["subs", "q6"])
        assert result.exit_code == 0
        assert "count = 4" in result.output
        assert "{1 3 4} = " in result.output

    def test_z9_all_normal(self):
        """Test that every subquasigroup of z9 is normal"""
        result = runner.invoke(app, ["subs", "z9-medial"])
        assert result.exit_code == 0
        assert "count = 22" in result.output
        assert "not normal" not in result.output


class TestSoftCheck:
    """Test the soft check command"""

    def test_tower(self):
        """Test a soft group over a non-associative base"""
        result = runner.invoke(app, ["soft", "check", "q6", "q6-tower"])
        assert result.exit_code == 0
        assert "class = soft group" in result.output
        assert "g2 = {1 2} groupoid=true quasigroup=true loop=true group=true" in result.output

    def test_not_closed(self, soft_file):
        """Test a value that is not a subquasigroup"""
        result = runner.invoke(app, ["soft", "check", "q6", soft_file("a: 1 2 3\n")])
        assert result.exit_code == 1
        assert "class = not a soft groupoid" in result.output
        assert "parameter=a" in result.output
        assert "cell=2 · 3 = 5" in result.output

    def test_unknown_symbol(self, soft_file):
        """Test a soft-set file naming a symbol outside the table"""
        result = runner.invoke(app, ["soft", "check", "q6", soft_file("a: 1 9\n")])
        assert result.exit_code == 2
        assert "unknown symbol '9'" in result.output


class TestSoftMetrics:
    """Test the soft metrics command"""

    def test_tower(self):
        """Test order and means of the q6 tower"""
        result = runner.invoke(app, ["soft", "metrics", "q6", "q6-tower"])
        assert result.exit_code == 0
        assert "order_raw = 6" in result.output
        assert "am = 2" in result.output
        assert "gm = 6^(1/3)" in result.output
        assert "gm_decimal = 1.8171" in result.output
        assert "am_ge_gm = true" in result.output
        assert "parastrophe_invariant = true" in result.output

    def test_decimal_places_setting(self, tmp_path):
        """Test that the rendering precision is configurable"""
        config = tmp_path / "settings.yml"
        config.write_text("settings:\n  decimal_places: 2\n")
        result = runner.invoke(app, ["--config", str(config), "soft", "metrics", "q6", "q6-tower"])
        assert result.exit_code == 0
        assert "gm_decimal = 1.82" in result.output

    def test_many_parameters(self, soft_file):
        """Test a soft set whose size product is far beyond float range"""
        carrier = " ".join(load("z9-medial").symbols)
        path = soft_file("".join(f"p{i}: {carrier}\n" for i in range(330)))
        result = runner.invoke(app, ["soft", "metrics", "z9-medial", path])
        assert result.exit_code == 0
        assert "order_raw = 2970" in result.output
        assert "gm = 9\n" in result.output
        assert "am_ge_gm = true" in result.output


class TestSoftCompare:
    """Test the soft compare command"""

    def test_small_in_large(self):
        """Test order and combinations of two soft sets over q8"""
        result = runner.invoke(app, ["soft", "compare", "q8", "q8-small", "q8-large"])
        assert result.exit_code == 0
        assert "left <= right = true" in result.output
        assert "right <= left = false" in result.output
        assert "equal = false" in result.output
        assert "left soft subquasigroup of right = true" in result.output
        assert "[restricted intersection]" in result.output
        assert "[extended union]" in result.output
        assert "g4 = {1 2 3 4}" in result.output

    def test_empty_intersection_reported(self, tmp_path):
        """Test that an empty intersection is reported, not raised"""
        left, right = tmp_path / "left.txt", tmp_path / "right.txt"
        left.write_text("a: 2\n")
        right.write_text("a: 3\n")
        result = runner.invoke(app, ["soft", "compare", "q6", str(left), str(right)])
        assert result.exit_code == 0
        assert "empty = true" in result.output
        assert "dropped = a" in result.output
        assert "a = {2 3}" in result.output

    def test_empty_intersection_strict(self, tmp_path):
        """Test that strict intersections refuse empty values"""
        left, right = tmp_path / "left.txt", tmp_path / "right.txt"
        left.write_text("a: 2\n")
        right.write_text("a: 3\n")
        config = tmp_path / "settings.yml"
        config.write_text("settings:\n  strict_intersections: true\n")
        args = ["--config", str(config), "soft", "compare", "q6", str(left), str(right)]
        result = runner.invoke(app, args)
        assert result.exit_code == 1
        assert "Empty result" in result.output
        assert "Dropped parameters: a" in result.output


class TestCosets:
    """Test the cosets command"""

    def test_z9_left(self, soft_file):
        """Test coset soft sets and the quotient family over z9"""
        path = soft_file("a: 00 10 20\nb: 11\n")
        result = runner.invoke(app, ["cosets", "z9-medial", path])
        assert result.exit_code == 0
        assert "[left coset 01]" in result.output
        assert "a = {02 12 22}" in result.output
        assert "b = {21}" in result.output
        assert "normal = true" in result.output
        assert "[quotient a]" in result.output
        assert "cosets = {00 10 20} {02 12 22} {01 11 21}" in result.output

    def test_not_normal(self, soft_file):
        """Test a soft group whose value is not normal"""
        result = runner.invoke(app, ["cosets", "s3", soft_file("a: 123 132\n")])
        assert result.exit_code == 0
        assert "normal = false" in result.output
        assert "parameter = a" in result.output

    def test_right_side(self, soft_file):
        """Test the --side option"""
        path = soft_file("a: 00 10 20\n")
        result = runner.invoke(app, ["cosets", "z9-medial", path, "--side", "right"])
        assert result.exit_code == 0
        assert "[right coset 00]" in result.output


class TestCongruences:
    """Test the congruences command"""

    def test_z9(self):
        """Test the six normal congruences of z9"""
        result = runner.invoke(app, ["congruences", "z9-medial"])
        assert result.exit_code == 0
        assert "count = 6" in result.output
        assert "({00 10 20})({01 11 21})({02 12 22})" in result.output

    def test_check_not_normal(self):
        """Test that a failing check exits non-zero"""
        result = runner.invoke(app, ["congruences", "z3-medial", "--check", "({0 1})({2})"])
        assert result.exit_code == 1
        assert "normal = false" in result.output

    def test_check_discrete(self):
        """Test that the discrete partition is normal"""
        result = runner.invoke(app, ["congruences", "z3-medial", "--check", "({0})({1})({2})"])
        assert result.exit_code == 0
        assert "normal = true" in result.output


class TestQuotient:
    """Test the quotient command"""

    def test_z9_line(self):
        """Test the quotient by a line of the plane"""
        result = runner.invoke(app, ["quotient", "z9-medial", "--subset", "00 10 20"])
        assert result.exit_code == 0
        assert "normal = true" in result.output
        assert "congruence = ({00 10 20})({01 11 21})({02 12 22})" in result.output
        assert "is_idempotent = true" in result.output

    def test_s3_by_a3(self):
        """Test the quotient of S3 by A3"""
        result = runner.invoke(app, ["quotient", "s3", "--subset", "123 231 312"])
        assert result.exit_code == 0
        assert "is_group = true" in result.output

    def test_not_normal(self):
        """Test a subgroup that is not normal"""
        result = runner.invoke(app, ["quotient", "s3", "--subset", "123 132"])
        assert result.exit_code == 1
        assert "normal = false" in result.output

    def test_not_subquasigroup(self):
        """Test a subset that is not closed"""
        result = runner.invoke(app, ["quotient", "q6", "--subset", "1 2 3"])
        assert result.exit_code == 1
        assert "subquasigroup = false" in result.output

    def test_empty_subset(self):
        """Test that an empty subset is refused"""
        result = runner.invoke(app, ["quotient", "q6", "--subset", ""])
        assert result.exit_code == 1
        assert "Precondition failed: subset must be non-empty" in result.output


class TestIso:
    """Test the iso command"""

    def test_not_isomorphic(self):
        """Test Z_4 against the Klein group"""
        result = runner.invoke(app, ["iso", "z4", "z2xz2"])
        assert result.exit_code == 1
        assert "isomorphic = false" in result.output

    def test_self(self):
        """Test that a table is isomorphic to itself"""
        result = runner.invoke(app, ["iso", "q6", "q6"])
        assert result.exit_code == 0
        assert "isomorphic = true" in result.output

    def test_different_orders(self):
        """Test tables of different order"""
        result = runner.invoke(app, ["iso", "q6", "z2"])
        assert result.exit_code == 1


class TestSuite:
    """Test the suite command"""

    def test_tower(self):
        """Test the suite with a soft set"""
        result = runner.invoke(app, ["suite", "q6", "q6-tower"])
        assert result.exit_code == 0
        assert "[suite]" in result.output
        assert "status = pass" in result.output


class TestFixtures:
    """Test the fixtures command"""

    def test_lists_tables_and_soft_sets(self):
        """Test both sections"""
        result = runner.invoke(app, ["fixtures"])
        assert result.exit_code == 0
        assert "[tables]" in result.output
        assert "[soft sets]" in result.output
        assert "q6-tower = over q6:" in result.output
        assert "z9-medial = " in result.output
