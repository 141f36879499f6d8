"""Tests for table builders and fixture resolution"""

import numpy as np
import pytest

from quasisoft_cli.algebra.core import emit_table, validate
from quasisoft_cli.algebra.fixtures import (
    BuilderFixture,
    FileFixture,
    cyclic,
    get_fixture,
    list_fixtures,
    medial,
    product,
    resolve_soft_set,
    resolve_table,
    symmetric,
)
from quasisoft_cli.algebra.subsets import format_subset
from quasisoft_cli.errors import FixtureError, TableParseError


class TestBuilders:
    """Test the table builders"""

    def test_cyclic(self):
        """Test Z_4 addition"""
        table = cyclic(4)
        assert table.symbols == ("0", "1", "2", "3")
        assert table.cells[3, 2] == 1

    def test_product(self):
        """Test digit symbols of Z_2 x Z_2"""
        table = product([2, 2])
        assert table.symbols == ("00", "01", "10", "11")
        assert np.all(np.diag(table.cells) == 0)

    def test_symmetric_identity_first(self):
        """Test that the identity permutation is the first symbol"""
        table = symmetric(3)
        assert table.symbols[0] == "123"
        assert list(table.cells[0]) == list(range(6))

    def test_medial_is_quasigroup(self):
        """Test 2x + 2y on Z_3 x Z_3"""
        table = medial(3, 2, 2, power=2)
        assert table.n == 9
        validate(table)
        assert np.all(np.diag(table.cells) == np.arange(9))

    def test_invalid_orders(self):
        """Test builder argument checks"""
        with pytest.raises(ValueError):
            cyclic(0)
        with pytest.raises(ValueError):
            product([])
        with pytest.raises(ValueError):
            medial(3, 2, 2, power=0)


class TestRegistry:
    """Test the fixture registry"""

    def test_list_fixtures(self):
        """Test that the registry lists tables and soft sets"""
        names = [f.name for f in list_fixtures()]
        assert names[:3] == ["q6", "q8-printed", "q8"]
        assert "q6-tower" in names
        assert "z9-medial" in names

    def test_fixture_kinds(self):
        """Test the fixture classes by source"""
        assert isinstance(get_fixture("q6"), FileFixture)
        z4 = get_fixture("z4")
        assert isinstance(z4, BuilderFixture)
        assert z4.kind == "table"
        tower = get_fixture("q6-tower")
        assert tower.kind == "softset"
        assert tower.table_name == "q6"

    def test_unknown_fixture(self):
        """Test that an unknown name is refused"""
        with pytest.raises(FixtureError, match="Unknown fixture: q7"):
            get_fixture("q7")

    def test_builder_text_round_trip(self):
        """Test that a built fixture emits the text format"""
        text = get_fixture("z2").read_text()
        assert text == "0 1\n0 1\n1 0\n"


class TestResolve:
    """Test resolving command-line references"""

    def test_fixture_name(self):
        """Test a built-in table by name"""
        table = resolve_table("q6")
        assert table.n == 6
        assert table.symbols[0] == "1"

    def test_file_path(self, tmp_path):
        """Test that an existing file wins over the registry"""
        path = tmp_path / "z3.txt"
        path.write_text(emit_table(cyclic(3)))
        table = resolve_table(str(path))
        assert np.array_equal(table.cells, cyclic(3).cells)

    def test_kind_mismatch(self):
        """Test that a soft-set fixture is not a table"""
        with pytest.raises(FixtureError, match="not a table"):
            resolve_table("q6-tower")

    def test_malformed_file(self, tmp_path):
        """Test that file content is parsed"""
        path = tmp_path / "bad.txt"
        path.write_text("1 2\n1 2\n")
        with pytest.raises(TableParseError):
            resolve_table(str(path))

    def test_soft_set(self):
        """Test a built-in soft set against its table"""
        q6 = resolve_table("q6")
        soft = resolve_soft_set("q6-tower", q6.symbols)
        assert list(soft.parameters) == ["g1", "g2", "g3"]
        assert format_subset(q6.symbols, soft.value("g3")) == "{1 3 4}"
