"""Validation functions for settings and the fixture registry"""

from typing import Any, Dict

INT_SETTINGS = {
    "enumeration_bound": 1,
    "scan_threshold": 0,
    "iso_bound": 1,
    "predicate_bound": 1,
    "decimal_places": 0,
    "random_seed": 0,
}
BOOL_SETTINGS = ("strict_intersections",)

VALID_SOURCES = ["file", "builder"]
VALID_BUILDERS = ["cyclic", "product", "symmetric", "medial"]
VALID_KINDS = ["table", "softset"]


def validate_settings(settings: Dict[str, Any]) -> tuple[bool, str]:
    """Validate a settings mapping

    Returns:
        (is_valid, error_message)
    """
    for key in settings:
        if key not in INT_SETTINGS and key not in BOOL_SETTINGS:
            return False, f"Unknown setting '{key}'"

    for key, minimum in INT_SETTINGS.items():
        if key not in settings:
            continue
        value = settings[key]
        if isinstance(value, bool) or not isinstance(value, int):
            return False, f"Invalid '{key}': must be an integer"
        if value < minimum:
            return False, f"Invalid '{key}': must be at least {minimum}"

    for key in BOOL_SETTINGS:
        if key in settings and not isinstance(settings[key], bool):
            return False, f"Invalid '{key}': must be true or false"

    if settings.get("scan_threshold", 0) > settings.get("enumeration_bound", 16):
        return False, "Invalid 'scan_threshold': must not exceed enumeration_bound"

    return True, ""


def validate_fixture_entry(name: str, entry: Dict[str, Any]) -> tuple[bool, str]:
    """Validate one entry of the fixture registry

    Returns:
        (is_valid, error_message)
    """
    if not isinstance(entry, dict):
        return False, f"Fixture '{name}' must be a mapping"

    kind = entry.get("kind", "table")
    if kind not in VALID_KINDS:
        return False, f"Invalid kind for '{name}': must be one of {VALID_KINDS}"

    description = entry.get("description")
    if not description or not isinstance(description, str):
        return False, f"Invalid or missing 'description' for '{name}'"

    source = entry.get("source")
    if source not in VALID_SOURCES:
        return False, f"Invalid source for '{name}': must be one of {VALID_SOURCES}"

    if source == "file":
        path = entry.get("path")
        if not path or not isinstance(path, str):
            return False, f"Invalid or missing 'path' for '{name}'"
    else:
        if kind != "table":
            return False, f"Fixture '{name}': only tables can be built"
        builder = entry.get("builder")
        if builder not in VALID_BUILDERS:
            return False, f"Invalid builder for '{name}': must be one of {VALID_BUILDERS}"
        params = entry.get("params", {})
        if not isinstance(params, dict):
            return False, f"Invalid 'params' for '{name}': must be a mapping"

    if kind == "softset":
        table = entry.get("table")
        if not table or not isinstance(table, str):
            return False, f"Soft-set fixture '{name}' must name its 'table'"

    return True, ""
