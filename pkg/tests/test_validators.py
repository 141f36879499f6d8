"""Tests for settings and fixture registry validation"""

from quasisoft_cli.validators import validate_fixture_entry, validate_settings


class TestValidateSettings:
    """Test validate_settings"""

    def test_valid(self):
        """Test a full, valid mapping"""
        is_valid, error = validate_settings(
            {
                "enumeration_bound": 16,
                "scan_threshold": 12,
                "iso_bound": 12,
                "predicate_bound": 64,
                "strict_intersections": False,
                "decimal_places": 4,
                "random_seed": 0,
            }
        )
        assert is_valid
        assert error == ""

    def test_unknown_key(self):
        """Test that unknown keys are refused"""
        is_valid, error = validate_settings({"colour": "red"})
        assert not is_valid
        assert "Unknown setting 'colour'" in error

    def test_not_an_integer(self):
        """Test integer settings"""
        is_valid, error = validate_settings({"iso_bound": "12"})
        assert not is_valid
        assert "must be an integer" in error

    def test_bool_is_not_an_integer(self):
        """Test that true is not accepted as a bound"""
        is_valid, _ = validate_settings({"iso_bound": True})
        assert not is_valid

    def test_minimum(self):
        """Test lower limits"""
        is_valid, error = validate_settings({"enumeration_bound": 0})
        assert not is_valid
        assert "at least 1" in error

    def test_boolean_setting(self):
        """Test the strict switch"""
        is_valid, error = validate_settings({"strict_intersections": "yes"})
        assert not is_valid
        assert "true or false" in error

    def test_scan_threshold_above_bound(self):
        """Test that the scan threshold cannot exceed the enumeration bound"""
        is_valid, error = validate_settings({"enumeration_bound": 8, "scan_threshold": 10})
        assert not is_valid
        assert "scan_threshold" in error


class TestValidateFixtureEntry:
    """Test validate_fixture_entry"""

    def test_file_table(self):
        """Test a table stored as a file"""
        entry = {"kind": "table", "description": "t", "source": "file", "path": "tables/t.txt"}
        assert validate_fixture_entry("t", entry) == (True, "")

    def test_builder_table(self):
        """Test a built table"""
        entry = {
            "description": "z5", "source": "builder", "builder": "cyclic", "params": {"order": 5}
        }
        assert validate_fixture_entry("z5", entry) == (True, "")

    def test_missing_description(self):
        """Test that a description is required"""
        is_valid, error = validate_fixture_entry("t", {"source": "file", "path": "a"})
        assert not is_valid
        assert "description" in error

    def test_unknown_source(self):
        """Test source values"""
        is_valid, error = validate_fixture_entry("t", {"description": "d", "source": "http"})
        assert not is_valid
        assert "Invalid source" in error

    def test_unknown_builder(self):
        """Test builder names"""
        entry = {"description": "d", "source": "builder", "builder": "dihedral"}
        is_valid, error = validate_fixture_entry("t", entry)
        assert not is_valid
        assert "Invalid builder" in error

    def test_soft_set_needs_table(self):
        """Test that a soft-set fixture names its table"""
        entry = {"kind": "softset", "description": "d", "source": "file", "path": "s.txt"}
        is_valid, error = validate_fixture_entry("s", entry)
        assert not is_valid
        assert "'table'" in error

    def test_soft_set_cannot_be_built(self):
        """Test that builders only make tables"""
        entry = {"kind": "softset", "description": "d", "source": "builder", "builder": "cyclic"}
        is_valid, error = validate_fixture_entry("s", entry)
        assert not is_valid
        assert "only tables" in error

    def test_not_a_mapping(self):
        """Test a scalar entry"""
        is_valid, _ = validate_fixture_entry("t", "q6.txt")
        assert not is_valid
