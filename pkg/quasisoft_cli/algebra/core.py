"""Cayley tables, Latin validation, parastrophes and structural predicates"""

import logging
from dataclasses import dataclass, field
import sys
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from quasisoft_cli.algebra.subsets import SubsetMask
from quasisoft_cli.config import DEFAULT_PREDICATE_BOUND
from quasisoft_cli.errors import (
    BoundExceededError,
    LatinViolation,
    PreconditionError,
    TableParseError,
)
from quasisoft_cli.schemas import DistributiveIdentities, LatinDefect, PropertyReport

logger = logging.getLogger(__name__)

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:  # Python 3.10 compatibility: mirror enum.StrEnum from 3.11

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()

# Elements are 0-based indices into a table's symbol list.
Element = int


class OperationKind(StrEnum):
    """The six parastrophic operations.

    Each kind is a permutation of the roles (x, y, z) of the defining relation
    x·y = z: a triple a belongs to the kind's graph iff the triple b with
    b[j] = a[roles[j]] belongs to the graph of multiplication.
    """

    MUL = "mul"
    OPP = "opp"
    RDIV = "rdiv"
    LDIV = "ldiv"
    ORDIV = "ordiv"
    OLDIV = "oldiv"

    @property
    def roles(self) -> tuple[int, int, int]:
        return _ROLES[self]

    @property
    def glyph(self) -> str:
        return _GLYPHS[self]

    def then(self, other: "OperationKind") -> "OperationKind":
        """Kind obtained by deriving `other` from a table that realizes `self`."""
        composite = tuple(other.roles[self.roles[j]] for j in range(3))
        return _BY_ROLES[composite]


_ROLES: dict[OperationKind, tuple[int, int, int]] = {
    OperationKind.MUL: (0, 1, 2),
    OperationKind.OPP: (1, 0, 2),
    OperationKind.LDIV: (0, 2, 1),
    OperationKind.RDIV: (2, 1, 0),
    OperationKind.ORDIV: (2, 0, 1),
    OperationKind.OLDIV: (1, 2, 0),
}
_BY_ROLES = {roles: kind for kind, roles in _ROLES.items()}
_GLYPHS = {
    OperationKind.MUL: "·",
    OperationKind.OPP: "⊛",
    OperationKind.RDIV: "/",
    OperationKind.LDIV: "\\",
    OperationKind.ORDIV: "//",
    OperationKind.OLDIV: "\\\\",
}

PARASTROPHES = tuple(k for k in OperationKind if k is not OperationKind.MUL)


class Side(StrEnum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """An n×n operation table over elements 0..n-1 with display symbols."""

    cells: np.ndarray
    symbols: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        cells = np.array(self.cells, dtype=np.intp)
        if cells.ndim != 2 or cells.shape[0] != cells.shape[1] or cells.shape[0] < 1:
            raise ValueError(f"cells must be a non-empty square array, got shape {cells.shape}")
        n = cells.shape[0]
        if cells.min() < 0 or cells.max() >= n:
            raise ValueError("every cell must index an element of the carrier")
        symbols = tuple(self.symbols) or tuple(str(i + 1) for i in range(n))
        if len(symbols) != n:
            raise ValueError(f"expected {n} symbols, got {len(symbols)}")
        if len(set(symbols)) != n:
            raise ValueError("display symbols must be pairwise distinct")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "symbols", symbols)

    @property
    def n(self) -> int:
        return int(self.cells.shape[0])

    def index_of(self, symbol: str) -> Element:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise PreconditionError(f"unknown symbol '{symbol}'") from None

    def symbol(self, element: Element) -> str:
        return self.symbols[element]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CayleyTable)
            and self.symbols == other.symbols
            and np.array_equal(self.cells, other.cells)
        )

    def __hash__(self) -> int:
        return hash((self.symbols, self.cells.tobytes()))


@dataclass(frozen=True, eq=False)
class ValidatedQuasigroup:
    """A Cayley table proven Latin, tagged with the operation it realizes.

    Build one with `validate`; op_kind records which parastrophe of the
    originally validated table this is.
    """

    table: CayleyTable
    op_kind: OperationKind = OperationKind.MUL
    _derived: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def cells(self) -> np.ndarray:
        return self.table.cells

    @property
    def symbols(self) -> tuple[str, ...]:
        return self.table.symbols

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ValidatedQuasigroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)


@dataclass(frozen=True)
class Permutation:
    """A bijection on 0..n-1 given by its images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images must form a bijection on the carrier")

    def __call__(self, element: Element) -> Element:
        return self.images[element]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, image in enumerate(self.images):
            inv[image] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class Nuclei:
    left: SubsetMask
    right: SubsetMask


def parse_table(text: str) -> CayleyTable:
    """Parse the text table format.

    Comment lines start with '#'. The first other line declares the symbols,
    the next n lines hold row i of the table (the value of i·j at position j).
    """
    symbols: Optional[list[str]] = None
    index: dict[str, int] = {}
    rows: list[list[int]] = []
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = lineno
        tokens = line.split()

        if symbols is None:
            for position, token in enumerate(tokens):
                if token in index:
                    raise TableParseError(f"duplicate symbol declaration '{token}'", line=lineno)
                index[token] = position
            symbols = tokens
            continue

        n = len(symbols)
        if len(rows) == n:
            raise TableParseError(f"unexpected extra row (table has {n} rows)", line=lineno)
        if len(tokens) != n:
            raise TableParseError(
                f"ragged row: expected {n} symbols, found {len(tokens)}", line=lineno
            )
        row = []
        for token in tokens:
            if token not in index:
                raise TableParseError(f"unknown symbol '{token}'", line=lineno)
            row.append(index[token])
        rows.append(row)

    if symbols is None:
        raise TableParseError("missing symbol header", line=None)
    if len(symbols) == 1 and not rows:
        # a lone symbol is both header and the one cell of the trivial table
        rows = [[0]]
    if len(rows) != len(symbols):
        raise TableParseError(
            f"expected {len(symbols)} rows, found {len(rows)}"
            " (the first line declares the symbols)",
            line=last_line or None,
        )

    return CayleyTable(np.array(rows, dtype=np.intp), tuple(symbols))


def emit_table(table: CayleyTable) -> str:
    """Render a table in the text format accepted by `parse_table`."""
    lines = [" ".join(table.symbols)]
    for row in table.cells:
        lines.append(" ".join(table.symbols[v] for v in row))
    return "\n".join(lines) + "\n"


def latin_defects(table: CayleyTable) -> list[LatinDefect]:
    """Every repeated symbol in every row and column, with missing symbols."""
    defects: list[LatinDefect] = []
    s = table.symbols
    for axis, lines in (("row", table.cells), ("column", table.cells.T)):
        for i, line in enumerate(lines):
            counts = np.bincount(line, minlength=table.n)
            missing = [s[v] for v in np.flatnonzero(counts == 0)]
            for v in np.flatnonzero(counts > 1):
                defects.append(
                    LatinDefect(
                        axis=axis,
                        index=s[i],
                        symbol=s[v],
                        positions=[s[j] for j in np.flatnonzero(line == v)],
                        missing=missing,
                    )
                )
    return defects


def validate(table: CayleyTable) -> ValidatedQuasigroup:
    """Check the Latin property and wrap the table as a quasigroup.

    Raises:
        LatinViolation: listing every defect, not just the first
    """
    defects = latin_defects(table)
    if defects:
        logger.info("table of order %d has %d Latin defects", table.n, len(defects))
        raise LatinViolation(defects)
    return ValidatedQuasigroup(table, OperationKind.MUL)


def translation(q: ValidatedQuasigroup, x: Element, side: Side) -> Permutation:
    """L_x: y ↦ x·y on the left, R_x: y ↦ y·x on the right."""
    line = q.cells[x] if side is Side.LEFT else q.cells[:, x]
    return Permutation(tuple(int(v) for v in line))


def derive_cells(cells: np.ndarray, kind: OperationKind) -> np.ndarray:
    """Table of the `kind` parastrophe of the operation given by `cells`."""
    n = cells.shape[0]
    xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    base = (xs, ys, cells)
    triple: list[np.ndarray] = [base[0]] * 3
    for j, role in enumerate(kind.roles):
        triple[role] = base[j]
    out = np.empty_like(cells)
    out[triple[0], triple[1]] = triple[2]
    return out


def parastrophe(q: ValidatedQuasigroup, kind: OperationKind) -> ValidatedQuasigroup:
    """Derive the `kind` parastrophe of q's own operation.

    MUL returns q unchanged; the result's op_kind composes with q's.
    """
    if kind is OperationKind.MUL:
        return q
    derived = q._derived.get(kind)
    if derived is None:
        table = CayleyTable(derive_cells(q.cells, kind), q.symbols)
        derived = ValidatedQuasigroup(table, q.op_kind.then(kind))
        q._derived[kind] = derived
    return derived


def evaluate(q: ValidatedQuasigroup, kind: OperationKind, x: Element, y: Element) -> Element:
    return int(parastrophe(q, kind).cells[x, y])


def parastrophe_classes(q: ValidatedQuasigroup) -> list[list[OperationKind]]:
    """Group the six kinds by identical tables, in OperationKind order."""
    classes: list[list[OperationKind]] = []
    representatives: list[np.ndarray] = []
    for kind in OperationKind:
        cells = parastrophe(q, kind).cells
        for rep, members in zip(representatives, classes):
            if np.array_equal(rep, cells):
                members.append(kind)
                break
        else:
            representatives.append(cells)
            classes.append([kind])
    return classes


def _check_bound(q: ValidatedQuasigroup, bound: int, what: str) -> None:
    if q.n > bound:
        raise BoundExceededError(what, q.n, bound)


def _associator(c: np.ndarray) -> np.ndarray:
    # [x, y, z] is true iff (xy)z = x(yz)
    return c[c] == c[:, c]


def find_identity(q: ValidatedQuasigroup) -> Optional[Element]:
    ar = np.arange(q.n)
    for e in range(q.n):
        if np.array_equal(q.cells[e], ar) and np.array_equal(q.cells[:, e], ar):
            return e
    return None


def is_left_distributive(c: np.ndarray) -> bool:
    # x(yz) = xy·xz
    return bool(np.array_equal(c[:, c], c[c[:, :, None], c[:, None, :]]))


def is_right_distributive(c: np.ndarray) -> bool:
    # (yz)x = yx·zx, indexed [y, z, x]
    return bool(np.array_equal(c[c], c[c[:, None, :], c[None, :, :]]))


def is_idempotent(c: np.ndarray) -> bool:
    return bool(np.array_equal(np.diagonal(c), np.arange(c.shape[0])))


def is_flexible(c: np.ndarray) -> bool:
    # x(yx) = (xy)x
    ar = np.arange(c.shape[0])[:, None]
    return bool(np.array_equal(c[ar, c.T], c[c, ar]))


def properties(q: ValidatedQuasigroup, bound: int = DEFAULT_PREDICATE_BOUND) -> PropertyReport:
    """Decide the structural predicates by exhaustive scan."""
    _check_bound(q, bound, "properties")
    c = q.cells
    identity = find_identity(q)
    return PropertyReport(
        is_loop=identity is not None,
        identity=identity,
        is_group=identity is not None and bool(_associator(c).all()),
        is_commutative=bool(np.array_equal(c, c.T)),
        is_idempotent=is_idempotent(c),
        is_flexible=is_flexible(c),
        is_left_distributive=is_left_distributive(c),
        is_right_distributive=is_right_distributive(c),
    )


def nuclei(q: ValidatedQuasigroup, bound: int = DEFAULT_PREDICATE_BOUND) -> Nuclei:
    """Left nucleus {a : a(xy) = (ax)y} and right nucleus {a : (xy)a = x(ya)}."""
    _check_bound(q, bound, "nuclei")
    assoc = _associator(q.cells)
    return Nuclei(
        left=SubsetMask.from_array(assoc.all(axis=(1, 2))),
        right=SubsetMask.from_array(assoc.all(axis=(0, 1))),
    )


def distributive_identities(
    q: ValidatedQuasigroup, bound: int = DEFAULT_PREDICATE_BOUND
) -> DistributiveIdentities:
    """Translations as automorphisms and the four division laws."""
    _check_bound(q, bound, "distributive identities")
    c = q.cells
    ld = parastrophe(q, OperationKind.LDIV).cells
    rd = parastrophe(q, OperationKind.RDIV).cells
    return DistributiveIdentities(
        translations_are_automorphisms=is_left_distributive(c) and is_right_distributive(c),
        left_mul_over_ldiv=bool(np.array_equal(c[:, ld], ld[c[:, :, None], c[:, None, :]])),
        right_mul_over_rdiv=bool(np.array_equal(c[rd], rd[c[:, None, :], c[None, :, :]])),
        ldiv_over_mul=bool(np.array_equal(ld[:, c], c[ld[:, :, None], ld[:, None, :]])),
        rdiv_over_mul=bool(np.array_equal(rd[c], c[rd[:, None, :], rd[None, :, :]])),
    )


def restrict(table: CayleyTable, subset: SubsetMask) -> CayleyTable:
    """The sub-table induced on a subset closed under the table's operation.

    Works on tables that are not Latin, so valid pieces of a defective table
    can still be examined.
    """
    members = list(subset.members)
    if not members:
        raise PreconditionError("cannot restrict to an empty subset")
    lookup = np.full(table.n, -1, dtype=np.intp)
    lookup[members] = np.arange(len(members))
    block = lookup[table.cells[np.ix_(members, members)]]
    if (block < 0).any():
        outside = np.unique(table.cells[np.ix_(members, members)][block < 0])
        raise PreconditionError(
            f"subset is not closed: products include {' '.join(table.symbols[v] for v in outside)}"
        )
    return CayleyTable(block, tuple(table.symbols[m] for m in members))


def table_from_rows(rows: Sequence[Iterable[int]], symbols: Sequence[str] = ()) -> CayleyTable:
    return CayleyTable(np.array([list(r) for r in rows], dtype=np.intp), tuple(symbols))
