"""Test configuration and shared fixtures"""

import itertools
import json

import numpy as np
import pytest
from typer.testing import CliRunner

from quasisoft_cli.algebra.core import CayleyTable, ValidatedQuasigroup, latin_defects, validate
from quasisoft_cli.algebra.fixtures import resolve_soft_set, resolve_table
from quasisoft_cli.algebra.softset import SoftSet
from quasisoft_cli.algebra.subsets import SubsetMask, parse_subset

runner = CliRunner()


def load(name: str) -> ValidatedQuasigroup:
    """Validated built-in table by fixture name."""
    return validate(resolve_table(name))


def load_soft(name: str, q: ValidatedQuasigroup) -> SoftSet:
    return resolve_soft_set(name, q.symbols)


def subset(q: ValidatedQuasigroup, text: str) -> SubsetMask:
    """Subset of q given by a space-separated symbol list."""
    return parse_subset(q.symbols, text)


def parse_json_output(output: str) -> dict:
    """Parse the JSON document printed by a --json command."""
    return json.loads(output[output.index("{") :])


def latin_squares(n: int):
    """Every Latin square of order n, row by row (orders up to 4)."""
    rows = [list(p) for p in itertools.permutations(range(n))]

    def extend(partial):
        if len(partial) == n:
            yield partial
            return
        for row in rows:
            if all(row[j] != other[j] for other in partial for j in range(n)):
                yield from extend(partial + [row])

    for square in extend([]):
        table = CayleyTable(np.array(square, dtype=np.intp))
        assert not latin_defects(table)
        yield validate(table)


def reduced_latin_squares(n: int):
    """Latin squares of order n with first row and first column in natural order."""
    rows = [list(p) for p in itertools.permutations(range(n))]

    def extend(partial):
        if len(partial) == n:
            yield partial
            return
        i = len(partial)
        for row in rows:
            if row[0] == i and all(row[j] != other[j] for other in partial for j in range(n)):
                yield from extend(partial + [row])

    for square in extend([list(range(n))]):
        yield validate(CayleyTable(np.array(square, dtype=np.intp)))


@pytest.fixture
def q6() -> ValidatedQuasigroup:
    return load("q6")


@pytest.fixture
def q8() -> ValidatedQuasigroup:
    return load("q8")


@pytest.fixture
def z3() -> ValidatedQuasigroup:
    return load("z3-medial")


@pytest.fixture
def z9() -> ValidatedQuasigroup:
    return load("z9-medial")


@pytest.fixture
def z4() -> ValidatedQuasigroup:
    return load("z4")


@pytest.fixture
def klein() -> ValidatedQuasigroup:
    return load("z2xz2")


@pytest.fixture
def s3() -> ValidatedQuasigroup:
    return load("s3")
