"""Built-in tables and soft sets, and resolution of command-line references"""

import importlib.resources
import itertools
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Sequence

import numpy as np
import yaml

from quasisoft_cli.algebra.core import CayleyTable, emit_table, parse_table
from quasisoft_cli.algebra.softset import SoftSet, parse_soft_set
from quasisoft_cli.errors import FixtureError
from quasisoft_cli.validators import validate_fixture_entry

logger = logging.getLogger(__name__)

__all__ = [
    "FixtureSource",
    "FileFixture",
    "BuilderFixture",
    "cyclic",
    "product",
    "symmetric",
    "medial",
    "get_fixture",
    "list_fixtures",
    "resolve_table",
    "resolve_soft_set",
]


def cyclic(order: int) -> CayleyTable:
    """Z_n under addition, symbols 0..n-1."""
    if order < 1:
        raise ValueError("order must be positive")
    ar = np.arange(order)
    return CayleyTable((ar[:, None] + ar[None, :]) % order, tuple(str(i) for i in range(order)))


def _digits(index: int, radices: Sequence[int]) -> list[int]:
    digits = []
    for radix in reversed(radices):
        index, digit = divmod(index, radix)
        digits.append(digit)
    return digits[::-1]


def _affine_product(radices: Sequence[int], a: int, b: int) -> CayleyTable:
    size = int(np.prod(radices))
    coords = np.array([_digits(i, radices) for i in range(size)], dtype=np.intp)
    mods = np.array(radices, dtype=np.intp)
    weights = np.array([int(np.prod(radices[i + 1 :])) for i in range(len(radices))])
    combined = (a * coords[:, None, :] + b * coords[None, :, :]) % mods
    cells = combined @ weights
    symbols = tuple("".join(str(d) for d in row) for row in coords.tolist())
    return CayleyTable(cells, symbols)


def product(orders: Sequence[int]) -> CayleyTable:
    """Direct product of cyclic groups, symbols are digit strings."""
    if not orders or any(o < 1 or o > 10 for o in orders):
        raise ValueError("orders must lie between 1 and 10")
    return _affine_product(list(orders), 1, 1)


def medial(modulus: int, a: int, b: int, power: int = 1) -> CayleyTable:
    """x∘y = ax + by on (Z_modulus)^power, componentwise.

    A quasigroup when a and b are units mod the modulus.
    """
    if modulus < 1 or modulus > 10 or power < 1:
        raise ValueError("modulus must lie between 1 and 10 and power must be positive")
    return _affine_product([modulus] * power, a, b)


def symmetric(degree: int = 3) -> CayleyTable:
    """S_degree under composition (pq)(i) = p(q(i)), one-line symbols, identity first."""
    if degree < 1 or degree > 9:
        raise ValueError("degree must lie between 1 and 9")
    perms = list(itertools.permutations(range(degree)))
    index = {p: i for i, p in enumerate(perms)}
    cells = [[index[tuple(p[q[i]] for i in range(degree))] for q in perms] for p in perms]
    symbols = tuple("".join(str(v + 1) for v in p) for p in perms)
    return CayleyTable(np.array(cells, dtype=np.intp), symbols)


BUILDERS = {"cyclic": cyclic, "product": product, "symmetric": symmetric, "medial": medial}


class FixtureSource(ABC):
    """A named built-in fixture"""

    def __init__(self, name: str, entry: Dict[str, Any]):
        self.name = name
        self.entry = entry

    @property
    def kind(self) -> str:
        return str(self.entry.get("kind", "table"))

    @property
    def description(self) -> str:
        return str(self.entry["description"])

    @property
    def table_name(self) -> str | None:
        """Table a soft-set fixture lives over"""
        return self.entry.get("table")

    @abstractmethod
    def read_text(self) -> str:
        """Fixture content in its file format"""
        pass


class FileFixture(FixtureSource):
    """Fixture stored as a text file under package data"""

    def read_text(self) -> str:
        path = self.entry["path"]
        try:
            resource = importlib.resources.files("quasisoft_cli.data")
            for part in path.split("/"):
                resource = resource.joinpath(part)
            return resource.read_text(encoding="utf-8")
        except Exception:
            fallback = Path(__file__).parent.parent / "data" / path
            if fallback.exists():
                return fallback.read_text(encoding="utf-8")
            raise FixtureError(f"Fixture file missing: {path}", name=self.name) from None


class BuilderFixture(FixtureSource):
    """Fixture computed by one of the table builders"""

    def build(self) -> CayleyTable:
        builder = BUILDERS[self.entry["builder"]]
        params = self.entry.get("params", {})
        try:
            return builder(**params)
        except (TypeError, ValueError) as e:
            raise FixtureError(f"Cannot build fixture '{self.name}': {e}", name=self.name) from e

    def read_text(self) -> str:
        return emit_table(self.build())


def _load_registry() -> Dict[str, Any]:
    """Load the fixture registry from package data"""
    try:
        text = importlib.resources.files("quasisoft_cli.data").joinpath("fixtures.yml").read_text()
        return yaml.safe_load(text) or {}
    except Exception:
        builtin_path = Path(__file__).parent.parent / "data" / "fixtures.yml"
        if builtin_path.exists():
            with builtin_path.open() as f:
                return yaml.safe_load(f) or {}
        return {}


def _create_fixture(name: str, entry: Dict[str, Any]) -> FixtureSource:
    is_valid, error = validate_fixture_entry(name, entry)
    if not is_valid:
        raise FixtureError(f"Invalid fixture registry: {error}", name=name)
    if entry["source"] == "builder":
        return BuilderFixture(name, entry)
    return FileFixture(name, entry)


def get_fixture(name: str) -> FixtureSource:
    """Get a fixture by name"""
    fixtures = _load_registry().get("fixtures", {})
    if name not in fixtures:
        raise FixtureError(f"Unknown fixture: {name}", name=name)
    return _create_fixture(name, fixtures[name])


def list_fixtures() -> list[FixtureSource]:
    """All registered fixtures in registry order"""
    fixtures = _load_registry().get("fixtures", {})
    return [_create_fixture(name, entry) for name, entry in fixtures.items()]


def _read_reference(reference: str, kind: str) -> str:
    path = Path(reference)
    if path.is_file():
        logger.info("reading %s from %s", kind, path)
        return path.read_text(encoding="utf-8")
    fixture = get_fixture(reference)
    if fixture.kind != kind:
        raise FixtureError(
            f"Fixture '{reference}' is a {fixture.kind}, not a {kind}", name=reference
        )
    logger.info("using built-in %s '%s'", kind, reference)
    return fixture.read_text()


def resolve_table(reference: str) -> CayleyTable:
    """Parse a table from a file path or a built-in fixture name.

    Raises:
        FixtureError: If the reference is neither an existing file nor a fixture
        TableParseError: If the content is malformed
    """
    return parse_table(_read_reference(reference, "table"))


def resolve_soft_set(reference: str, symbols: Sequence[str]) -> SoftSet:
    return parse_soft_set(_read_reference(reference, "softset"), symbols)
