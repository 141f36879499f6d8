"""Tests for settings loading"""

import pytest
import yaml

from quasisoft_cli.config import (
    DEFAULT_ENUMERATION_BOUND,
    DEFAULT_ISO_BOUND,
    Settings,
    load_settings,
)
from quasisoft_cli.errors import ConfigurationError


class TestLoadSettings:
    """Test load_settings"""

    def test_builtin_defaults(self):
        """Test that the packaged defaults match the model defaults"""
        settings = load_settings()
        assert settings == Settings()
        assert settings.enumeration_bound == DEFAULT_ENUMERATION_BOUND
        assert settings.iso_bound == DEFAULT_ISO_BOUND
        assert settings.decimal_places == 4

    def test_user_file_overrides(self, tmp_path):
        """Test that a user file overrides selected keys"""
        config = tmp_path / "settings.yml"
        config.write_text(
            yaml.safe_dump({"settings": {"iso_bound": 6, "strict_intersections": True}})
        )
        settings = load_settings(config)
        assert settings.iso_bound == 6
        assert settings.strict_intersections
        assert settings.enumeration_bound == DEFAULT_ENUMERATION_BOUND

    def test_missing_file(self, tmp_path):
        """Test a path that does not exist"""
        with pytest.raises(ConfigurationError, match="not found"):
            load_settings(tmp_path / "absent.yml")

    def test_invalid_value(self, tmp_path):
        """Test that validation errors name the field"""
        config = tmp_path / "settings.yml"
        config.write_text("settings:\n  iso_bound: -1\n")
        with pytest.raises(ConfigurationError) as exc:
            load_settings(config)
        assert exc.value.field == "iso_bound"

    def test_not_a_mapping(self, tmp_path):
        """Test a YAML document that is a list"""
        config = tmp_path / "settings.yml"
        config.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigurationError, match="mapping"):
            load_settings(config)

    def test_settings_block_not_a_mapping(self, tmp_path):
        """Test a settings key holding a list"""
        config = tmp_path / "settings.yml"
        config.write_text("settings:\n  - 1\n  - 2\n")
        with pytest.raises(ConfigurationError, match="'settings' must be a mapping") as exc:
            load_settings(config)
        assert exc.value.field == "settings"

    def test_empty_settings_block(self, tmp_path):
        """Test that a bare settings key keeps the defaults"""
        config = tmp_path / "settings.yml"
        config.write_text("settings:\n")
        assert load_settings(config) == Settings()

    def test_builtin_fallback(self, mocker):
        """Test that missing package data falls back to the model defaults"""
        mocker.patch("quasisoft_cli.config._load_builtin_settings", return_value={})
        assert load_settings() == Settings()
