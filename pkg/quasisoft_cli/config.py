"""Settings loading for quasisoft-cli"""

import importlib.resources
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel, Field

from quasisoft_cli.errors import ConfigurationError
from quasisoft_cli.validators import validate_settings

DEFAULT_ENUMERATION_BOUND = 16
DEFAULT_SCAN_THRESHOLD = 12
DEFAULT_ISO_BOUND = 12
DEFAULT_PREDICATE_BOUND = 64


class Settings(BaseModel):
    """Bounds and switches for the exhaustive procedures"""

    enumeration_bound: int = Field(
        DEFAULT_ENUMERATION_BOUND, description="Largest carrier for subquasigroup enumeration"
    )
    scan_threshold: int = Field(
        DEFAULT_SCAN_THRESHOLD, description="Largest carrier enumerated by direct subset scan"
    )
    iso_bound: int = Field(DEFAULT_ISO_BOUND, description="Largest carrier for isomorphism search")
    predicate_bound: int = Field(
        DEFAULT_PREDICATE_BOUND, description="Largest carrier for triple-scan predicates"
    )
    strict_intersections: bool = Field(
        False, description="Fail soft intersections instead of dropping empty values"
    )
    decimal_places: int = Field(4, description="Decimal places for geometric mean rendering")
    random_seed: int = Field(0, description="Seed for sampled batteries")


def _load_builtin_settings() -> Dict[str, Any]:
    """Load built-in defaults from package data"""
    try:
        text = importlib.resources.files("quasisoft_cli.data").joinpath("defaults.yml").read_text()
        return yaml.safe_load(text) or {}
    except Exception:
        builtin_path = Path(__file__).parent / "data" / "defaults.yml"
        if builtin_path.exists():
            with builtin_path.open() as f:
                return yaml.safe_load(f) or {}
        return {}


def _load_user_settings(config_file: Path) -> Dict[str, Any]:
    if not config_file.exists():
        raise ConfigurationError(f"Config file not found: {config_file}")
    with config_file.open() as f:
        try:
            data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Config file is not valid YAML: {e}") from e
    if not isinstance(data, dict):
        raise ConfigurationError("Config file must contain a mapping")
    return data


def _settings_block(data: Dict[str, Any], source: str) -> Dict[str, Any]:
    block = data.get("settings")
    if block is None:
        return {}
    if not isinstance(block, dict):
        raise ConfigurationError(
            f"{source}: 'settings' must be a mapping, got {type(block).__name__}",
            field="settings",
        )
    return block


def load_settings(config_file: Optional[Path] = None) -> Settings:
    """Load settings from built-in defaults, overridden by an optional user file.

    Raises:
        ConfigurationError: If the settings block is not a mapping or the merged
            settings fail validation
    """
    merged = dict(_settings_block(_load_builtin_settings(), "built-in defaults"))
    if config_file is not None:
        merged.update(_settings_block(_load_user_settings(config_file), str(config_file)))

    is_valid, error = validate_settings(merged)
    if not is_valid:
        field = error.split("'")[1] if "'" in error else None
        raise ConfigurationError(f"Configuration error: {error}", field=field)

    return Settings(**merged)
