"""Subsets of a finite carrier stored as integer bitmasks"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from quasisoft_cli.errors import TableParseError, UniverseMismatchError


@dataclass(frozen=True)
class SubsetMask:
    """A subset of the carrier {0, ..., n-1}.

    Used for H, soft values F(a), cosets, nuclei and congruence blocks.
    """

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"carrier size must be non-negative, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"mask {self.bits:#x} does not fit a carrier of size {self.n}")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "SubsetMask":
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"element {i} outside carrier of size {n}")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def from_array(cls, flags: np.ndarray) -> "SubsetMask":
        return cls.from_indices(len(flags), np.flatnonzero(flags).tolist())

    @classmethod
    def full(cls, n: int) -> "SubsetMask":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "SubsetMask":
        return cls(n, 0)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.bits >> i & 1)

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def is_full(self) -> bool:
        return self.bits == (1 << self.n) - 1

    @property
    def least(self) -> int:
        return (self.bits & -self.bits).bit_length() - 1

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.cardinality, self.members)

    def to_array(self) -> np.ndarray:
        return np.array([bool(self.bits >> i & 1) for i in range(self.n)], dtype=bool)

    def issubset(self, other: "SubsetMask") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def _check(self, other: "SubsetMask") -> None:
        if self.n != other.n:
            raise UniverseMismatchError(self.n, other.n)

    def __and__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.n, self.bits & other.bits)

    def __or__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.n, self.bits | other.bits)

    def __sub__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.n, self.bits & ~other.bits)

    def __le__(self, other: "SubsetMask") -> bool:
        return self.issubset(other)

    def __contains__(self, element: object) -> bool:
        return isinstance(element, int) and 0 <= element < self.n and bool(self.bits >> element & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.cardinality


def parse_subset(symbols: Sequence[str], text: str, line: int | None = None) -> SubsetMask:
    """Parse a whitespace-separated symbol list against a table's symbols."""
    index = {s: i for i, s in enumerate(symbols)}
    members = []
    for token in text.split():
        if token not in index:
            raise TableParseError(f"unknown symbol '{token}'", line=line)
        members.append(index[token])
    return SubsetMask.from_indices(len(symbols), members)


def format_subset(symbols: Sequence[str], mask: SubsetMask) -> str:
    return "{" + " ".join(symbols[i] for i in mask) + "}"
