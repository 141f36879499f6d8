"""Soft sets over a finite universe and their operations"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from quasisoft_cli.algebra.subsets import SubsetMask, parse_subset
from quasisoft_cli.errors import EmptySoftSetError, TableParseError, UniverseMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SoftSet:
    """A parameter list A with a map F: A → non-empty subsets of the universe.

    `dropped` names parameters removed by an intersection because their
    value became empty; it takes no part in comparisons.
    """

    n: int
    parameters: tuple[str, ...]
    values: tuple[SubsetMask, ...]
    dropped: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if len(self.parameters) != len(self.values):
            raise ValueError("every parameter needs exactly one value")
        if not self.parameters:
            raise ValueError("a soft set needs at least one parameter")
        if len(set(self.parameters)) != len(self.parameters):
            raise ValueError("parameter names must be pairwise distinct")
        for name, value in zip(self.parameters, self.values):
            if value.n != self.n:
                raise UniverseMismatchError(self.n, value.n)
            if value.is_empty:
                raise ValueError(f"value of parameter '{name}' is empty")

    @classmethod
    def from_mapping(
        cls, n: int, mapping: Mapping[str, SubsetMask | Iterable[int]]
    ) -> "SoftSet":
        values = [
            v if isinstance(v, SubsetMask) else SubsetMask.from_indices(n, v)
            for v in mapping.values()
        ]
        return cls(n, tuple(mapping), tuple(values))

    def value(self, parameter: str) -> SubsetMask:
        return self.values[self.parameters.index(parameter)]

    def items(self) -> Iterator[tuple[str, SubsetMask]]:
        return zip(self.parameters, self.values)

    def as_dict(self) -> dict[str, SubsetMask]:
        return dict(self.items())

    def with_values(self, values: Sequence[SubsetMask]) -> "SoftSet":
        return SoftSet(self.n, self.parameters, tuple(values))


def _same_universe(f: SoftSet, g: SoftSet) -> None:
    if f.n != g.n:
        raise UniverseMismatchError(f.n, g.n)


def soft_subset(f: SoftSet, g: SoftSet) -> bool:
    """A ⊆ B and F(a) ⊆ G(a) for every a in A."""
    _same_universe(f, g)
    other = g.as_dict()
    return all(a in other and value <= other[a] for a, value in f.items())


def soft_equal(f: SoftSet, g: SoftSet) -> bool:
    return soft_subset(f, g) and soft_subset(g, f)


def _assemble(
    n: int, pairs: list[tuple[str, SubsetMask]], dropped: list[str], strict: bool, op: str
) -> SoftSet:
    if dropped:
        if strict:
            raise EmptySoftSetError(
                f"{op}: empty values for {', '.join(dropped)}", dropped=dropped
            )
        logger.warning("%s dropped parameters with empty values: %s", op, ", ".join(dropped))
    if not pairs:
        raise EmptySoftSetError(f"{op}: every value is empty", dropped=dropped)
    return SoftSet(
        n,
        tuple(a for a, _ in pairs),
        tuple(v for _, v in pairs),
        dropped=tuple(dropped),
    )


def restricted_intersection(f: SoftSet, g: SoftSet, strict: bool = False) -> SoftSet:
    """H(c) = F(c) ∩ G(c) over C = A ∩ B.

    Parameters whose intersection is empty are dropped and listed in
    `dropped`; with strict=True they raise instead.
    """
    _same_universe(f, g)
    other = g.as_dict()
    common = [a for a in f.parameters if a in other]
    if not common:
        raise EmptySoftSetError("restricted intersection: parameter sets are disjoint")
    pairs, dropped = [], []
    for a in common:
        value = f.value(a) & other[a]
        if value.is_empty:
            dropped.append(a)
        else:
            pairs.append((a, value))
    return _assemble(f.n, pairs, dropped, strict, "restricted intersection")


def extended_intersection(f: SoftSet, g: SoftSet, strict: bool = False) -> SoftSet:
    """F on A−B, G on B−A, F ∩ G on A ∩ B."""
    _same_universe(f, g)
    left, right = f.as_dict(), g.as_dict()
    pairs, dropped = [], []
    for a in _union_order(f, g):
        if a in left and a in right:
            value = left[a] & right[a]
            if value.is_empty:
                dropped.append(a)
                continue
        else:
            value = left[a] if a in left else right[a]
        pairs.append((a, value))
    return _assemble(f.n, pairs, dropped, strict, "extended intersection")


def extended_union(f: SoftSet, g: SoftSet) -> SoftSet:
    """F on A−B, G on B−A, F ∪ G on A ∩ B."""
    _same_universe(f, g)
    left, right = f.as_dict(), g.as_dict()
    pairs = []
    for a in _union_order(f, g):
        if a in left and a in right:
            pairs.append((a, left[a] | right[a]))
        else:
            pairs.append((a, left[a] if a in left else right[a]))
    return SoftSet(f.n, tuple(a for a, _ in pairs), tuple(v for _, v in pairs))


def _union_order(f: SoftSet, g: SoftSet) -> list[str]:
    return list(f.parameters) + [b for b in g.parameters if b not in f.as_dict()]


def parse_soft_set(text: str, symbols: Sequence[str]) -> SoftSet:
    """Parse lines of the form "param: s1 s2 ..." against a table's symbols."""
    mapping: dict[str, SubsetMask] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep or not name or len(name.split()) != 1:
            raise TableParseError("malformed line, expected 'param: symbols'", line=lineno)
        if name in mapping:
            raise TableParseError(f"duplicate parameter '{name}'", line=lineno)
        value = parse_subset(symbols, rest, line=lineno)
        if value.is_empty:
            raise TableParseError(f"parameter '{name}' has an empty value", line=lineno)
        mapping[name] = value
    if not mapping:
        raise TableParseError("soft set declares no parameters")
    return SoftSet.from_mapping(len(symbols), mapping)


def emit_soft_set(soft: SoftSet, symbols: Sequence[str]) -> str:
    lines = [f"{a}: {' '.join(symbols[i] for i in value)}" for a, value in soft.items()]
    return "\n".join(lines) + "\n"
