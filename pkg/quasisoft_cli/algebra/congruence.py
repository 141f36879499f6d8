"""Normal congruences, normal subquasigroups and quotients"""

import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from quasisoft_cli.algebra.core import CayleyTable, ValidatedQuasigroup, validate
from quasisoft_cli.algebra.subalgebra import is_subquasigroup
from quasisoft_cli.algebra.subsets import SubsetMask
from quasisoft_cli.config import DEFAULT_ENUMERATION_BOUND
from quasisoft_cli.errors import (
    BoundExceededError,
    CongruenceError,
    PartitionError,
    PreconditionError,
    TableParseError,
)

logger = logging.getLogger(__name__)


class UnionFind:
    """Disjoint sets over 0..n-1 with union by rank and path halving."""

    def __init__(self, n: int) -> None:
        self.p = list(range(n))
        self.r = [0] * n

    def find(self, x: int) -> int:
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        pa, pb = self.find(a), self.find(b)
        if pa == pb:
            return False
        ra, rb = self.r[pa], self.r[pb]
        if ra < rb:
            self.p[pa] = pb
        elif rb < ra:
            self.p[pb] = pa
        else:
            self.p[pb] = pa
            self.r[pa] = ra + 1
        return True

    def labels(self) -> np.ndarray:
        roots = np.array([self.find(x) for x in range(len(self.p))], dtype=np.intp)
        return _normalize(roots)


def _normalize(labels: np.ndarray) -> np.ndarray:
    # relabel every class by its least member
    least: dict[int, int] = {}
    out = np.empty(len(labels), dtype=np.intp)
    for x, label in enumerate(labels.tolist()):
        out[x] = least.setdefault(label, x)
    return out


@dataclass(frozen=True)
class Congruence:
    """A partition of the carrier, each element labelled by the least member of its block."""

    n: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.n:
            raise PartitionError(f"expected {self.n} labels, got {len(self.labels)}")
        normalized = tuple(_normalize(np.array(self.labels, dtype=np.intp)).tolist())
        object.__setattr__(self, "labels", normalized)

    @classmethod
    def from_labels(cls, labels: Sequence[int] | np.ndarray) -> "Congruence":
        return cls(len(labels), tuple(int(v) for v in labels))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[SubsetMask | Iterable[int]]) -> "Congruence":
        """Raises PartitionError unless the blocks are non-empty, disjoint and cover 0..n-1."""
        labels = [-1] * n
        for block in blocks:
            members = list(block)
            if not members:
                raise PartitionError("blocks must be non-empty")
            for x in members:
                if not 0 <= x < n:
                    raise PartitionError(f"element {x} outside carrier of size {n}")
                if labels[x] != -1:
                    raise PartitionError(f"element {x} lies in two blocks")
                labels[x] = members[0]
        missing = [x for x, label in enumerate(labels) if label == -1]
        if missing:
            raise PartitionError(f"blocks do not cover elements {missing}")
        return cls(n, tuple(labels))

    @classmethod
    def discrete(cls, n: int) -> "Congruence":
        return cls(n, tuple(range(n)))

    @classmethod
    def total(cls, n: int) -> "Congruence":
        return cls(n, (0,) * n)

    @property
    def blocks(self) -> tuple[SubsetMask, ...]:
        grouped: dict[int, list[int]] = {}
        for x, label in enumerate(self.labels):
            grouped.setdefault(label, []).append(x)
        return tuple(SubsetMask.from_indices(self.n, members) for members in grouped.values())

    @property
    def block_count(self) -> int:
        return len(set(self.labels))

    @property
    def is_discrete(self) -> bool:
        return self.block_count == self.n

    @property
    def is_total(self) -> bool:
        return self.block_count == 1

    def block_of(self, x: int) -> SubsetMask:
        label = self.labels[x]
        return SubsetMask.from_indices(
            self.n, (y for y, other in enumerate(self.labels) if other == label)
        )

    def related(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def refines(self, other: "Congruence") -> bool:
        """Every block of self lies inside a block of other."""
        return all(other.labels[x] == other.labels[label] for x, label in enumerate(self.labels))

    def pairs(self) -> list[tuple[int, int]]:
        """A generating set: each element paired with its block's least member."""
        return [(label, x) for x, label in enumerate(self.labels) if label != x]

    def array(self) -> np.ndarray:
        return np.array(self.labels, dtype=np.intp)


def _cancellative(products: np.ndarray, labels: np.ndarray) -> bool:
    # products[c, a] holds the class of c·a (or a·c); equal classes must come from related a
    same = products[:, :, None] == products[:, None, :]
    related = labels[:, None] == labels[None, :]
    return bool((~same | related[None, :, :]).all())


def is_normal_congruence(q: ValidatedQuasigroup, theta: Congruence) -> bool:
    """Left cancellation, right cancellation and compatibility with products."""
    if theta.n != q.n:
        raise PartitionError(f"partition of {theta.n} elements for a carrier of {q.n}")
    c = q.cells
    labels = theta.array()
    compatible = np.array_equal(labels[c], labels[c[np.ix_(labels, labels)]])
    return (
        compatible
        and _cancellative(labels[c], labels)
        and _cancellative(labels[c.T], labels)
    )


def generated_normal_congruence(
    q: ValidatedQuasigroup, pairs: Iterable[tuple[int, int]] = ()
) -> Congruence:
    """Least normal congruence relating every given pair.

    Each pass merges whatever one of the three normality conditions forces,
    until a pass merges nothing.
    """
    c = q.cells
    uf = UnionFind(q.n)
    for a, b in pairs:
        uf.union(a, b)

    passes = 0
    while True:
        passes += 1
        merged = False
        labels = uf.labels()
        forced = c[np.ix_(labels, labels)]
        for x, y in zip(c.ravel().tolist(), forced.ravel().tolist()):
            merged |= uf.union(x, y)
        for table in (c, c.T):
            labels = uf.labels()
            classes = labels[table]
            for line in classes:
                first: dict[int, int] = {}
                for a, label in enumerate(line.tolist()):
                    merged |= uf.union(first.setdefault(label, a), a)
        if not merged:
            break

    theta = Congruence.from_labels(uf.labels())
    logger.debug("congruence with %d blocks after %d passes", theta.block_count, passes)
    return theta


def is_normal_subquasigroup(q: ValidatedQuasigroup, subset: SubsetMask) -> Optional[Congruence]:
    """θ_H when H is one of its blocks, otherwise None.

    Raises:
        PreconditionError: If H is not a subquasigroup
    """
    if not is_subquasigroup(q, subset):
        raise PreconditionError("subset is not a subquasigroup")
    anchor = subset.least
    theta = generated_normal_congruence(q, [(anchor, h) for h in subset])
    if theta.block_of(anchor) == subset:
        return theta
    return None


def quotient(q: ValidatedQuasigroup, theta: Congruence) -> ValidatedQuasigroup:
    """Quasigroup on the blocks of a normal congruence, blocks named "[x]" by least member.

    Raises:
        CongruenceError: If θ is not a normal congruence or [a]·[b] is not well defined
    """
    if not is_normal_congruence(q, theta):
        raise CongruenceError("partition is not a normal congruence")
    labels = theta.array()
    reps = np.unique(labels)
    index = np.full(q.n, -1, dtype=np.intp)
    index[reps] = np.arange(len(reps))
    block_index = index[labels]

    cells = block_index[q.cells[np.ix_(reps, reps)]]
    if not np.array_equal(block_index[q.cells], cells[np.ix_(block_index, block_index)]):
        raise CongruenceError("block product is not well defined")
    symbols = tuple(f"[{q.symbols[r]}]" for r in reps.tolist())
    return validate(CayleyTable(cells, symbols))


def iter_partitions(n: int) -> Iterator[Congruence]:
    """Every partition of 0..n-1, by restricted growth strings."""
    if n == 0:
        return
    growth = [0] * n
    while True:
        yield Congruence.from_labels(growth)
        i = n - 1
        while i > 0 and growth[i] == max(growth[:i]) + 1:
            i -= 1
        if i == 0:
            return
        growth[i] += 1
        for j in range(i + 1, n):
            growth[j] = 0


def all_normal_congruences(
    q: ValidatedQuasigroup, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[Congruence]:
    """Every normal congruence, finest first.

    Each one is the join of the principal congruences it contains, so joins
    of principal congruences reach them all.
    """
    if q.n > bound:
        raise BoundExceededError("congruence enumeration", q.n, bound)
    principal = {
        generated_normal_congruence(q, [(a, b)]) for a in range(q.n) for b in range(a + 1, q.n)
    }
    found = {Congruence.discrete(q.n)} | principal
    frontier = list(found)
    while frontier:
        theta = frontier.pop()
        for generator in principal:
            if generator.refines(theta):
                continue
            joined = generated_normal_congruence(q, theta.pairs() + generator.pairs())
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    logger.debug("order %d: %d normal congruences", q.n, len(found))
    return sorted(found, key=lambda t: (-t.block_count, t.labels))


_BLOCK = re.compile(r"\(\{([^{}()]*)\}\)")


def parse_congruence(symbols: Sequence[str], text: str) -> Congruence:
    """Parse the "({a b})({c})" block-list form."""
    body = text.strip()
    if not body or _BLOCK.sub("", body).strip():
        raise TableParseError(f"malformed block list '{text}'")
    index = {s: i for i, s in enumerate(symbols)}
    blocks = []
    for match in _BLOCK.finditer(body):
        members = []
        for token in match.group(1).split():
            if token not in index:
                raise TableParseError(f"unknown symbol '{token}'")
            members.append(index[token])
        blocks.append(members)
    return Congruence.from_blocks(len(symbols), blocks)


def format_congruence(symbols: Sequence[str], theta: Congruence) -> str:
    return "".join(
        "({" + " ".join(symbols[x] for x in block) + "})" for block in theta.blocks
    )
