"""Closure, subquasigroups and their enumeration"""

import logging
from typing import Optional

import numpy as np

from quasisoft_cli.algebra.core import (
    OperationKind,
    ValidatedQuasigroup,
    find_identity,
    parastrophe,
    restrict,
    validate,
)
from quasisoft_cli.algebra.subsets import SubsetMask
from quasisoft_cli.config import DEFAULT_ENUMERATION_BOUND, DEFAULT_SCAN_THRESHOLD
from quasisoft_cli.errors import (
    BoundExceededError,
    EmptySubsetError,
    NotAGroupError,
    PreconditionError,
    UniverseMismatchError,
)
from quasisoft_cli.schemas import GroupCriterion

logger = logging.getLogger(__name__)

# A non-empty subset is a subquasigroup iff it is closed under these three.
CLOSURE_KINDS = (OperationKind.MUL, OperationKind.LDIV, OperationKind.RDIV)


def _require_subset(q: ValidatedQuasigroup, subset: SubsetMask) -> None:
    if subset.n != q.n:
        raise UniverseMismatchError(q.n, subset.n)
    if subset.is_empty:
        raise EmptySubsetError()


def _closed(cells: np.ndarray, members: list[int], flags: np.ndarray) -> bool:
    return bool(flags[cells[np.ix_(members, members)]].all())


def is_closed(q: ValidatedQuasigroup, kind: OperationKind, subset: SubsetMask) -> bool:
    """True iff evaluate(q, kind, x, y) stays in the subset for all x, y in it."""
    _require_subset(q, subset)
    return _closed(parastrophe(q, kind).cells, list(subset.members), subset.to_array())


def is_subquasigroup(q: ValidatedQuasigroup, subset: SubsetMask) -> bool:
    _require_subset(q, subset)
    members, flags = list(subset.members), subset.to_array()
    return all(_closed(parastrophe(q, k).cells, members, flags) for k in CLOSURE_KINDS)


def closure_witness(
    q: ValidatedQuasigroup, subset: SubsetMask
) -> Optional[tuple[OperationKind, int, int, int]]:
    """First (kind, x, y, z) with x, y in the subset and z = x kind y outside it."""
    _require_subset(q, subset)
    members, flags = list(subset.members), subset.to_array()
    for kind in CLOSURE_KINDS:
        block = parastrophe(q, kind).cells[np.ix_(members, members)]
        outside = np.argwhere(~flags[block])
        if len(outside):
            i, j = outside[0]
            return kind, members[i], members[j], int(block[i, j])
    return None


def closure(q: ValidatedQuasigroup, seed: SubsetMask) -> SubsetMask:
    """Smallest subquasigroup containing the seed."""
    _require_subset(q, seed)
    tables = [parastrophe(q, k).cells for k in CLOSURE_KINDS]
    inside = set(seed.members)
    while True:
        members = sorted(inside)
        grid = np.ix_(members, members)
        produced = set(np.unique(np.concatenate([t[grid].ravel() for t in tables])).tolist())
        if produced <= inside:
            return SubsetMask.from_indices(q.n, inside)
        inside |= produced


def induced(q: ValidatedQuasigroup, subset: SubsetMask) -> ValidatedQuasigroup:
    """The subquasigroup as a quasigroup of its own, keeping its symbols."""
    if not is_subquasigroup(q, subset):
        raise PreconditionError("subset is not a subquasigroup")
    return validate(restrict(q.table, subset))


def _scan_subsets(q: ValidatedQuasigroup) -> list[SubsetMask]:
    tables = [parastrophe(q, k).cells for k in CLOSURE_KINDS]
    found = []
    for bits in range(1, 1 << q.n):
        mask = SubsetMask(q.n, bits)
        members, flags = list(mask.members), mask.to_array()
        if all(_closed(t, members, flags) for t in tables):
            found.append(mask)
    return found


def _closures_of_seeds(q: ValidatedQuasigroup) -> list[SubsetMask]:
    # Every subquasigroup is reached by adding one generator at a time.
    seen: set[SubsetMask] = set()
    frontier = [closure(q, SubsetMask.from_indices(q.n, [x])) for x in range(q.n)]
    while frontier:
        current = frontier.pop()
        if current in seen:
            continue
        seen.add(current)
        for x in range(q.n):
            if x not in current:
                grown = closure(q, SubsetMask(q.n, current.bits | 1 << x))
                if grown not in seen:
                    frontier.append(grown)
    return list(seen)


def all_subquasigroups(
    q: ValidatedQuasigroup,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    scan_threshold: int = DEFAULT_SCAN_THRESHOLD,
) -> list[SubsetMask]:
    """All subquasigroups sorted by (cardinality, members).

    Raises:
        BoundExceededError: If the carrier is larger than `bound`
    """
    if q.n > bound:
        raise BoundExceededError("subquasigroup enumeration", q.n, bound)
    found = _scan_subsets(q) if q.n <= scan_threshold else _closures_of_seeds(q)
    logger.debug("order %d: %d subquasigroups", q.n, len(found))
    return sorted(found, key=SubsetMask.sort_key)


def check_parastrophe_invariance(q: ValidatedQuasigroup, subset: SubsetMask) -> bool:
    """Whether a subquasigroup stays one in all six parastrophes."""
    if not is_subquasigroup(q, subset):
        raise PreconditionError("subset is not a subquasigroup")
    return all(is_subquasigroup(parastrophe(q, k), subset) for k in OperationKind)


def group_criterion(q: ValidatedQuasigroup, subset: SubsetMask) -> GroupCriterion:
    """Subloop, subgroup, and closure under both divisions, for a group table.

    Raises:
        NotAGroupError: If q is not a group
    """
    _require_subset(q, subset)
    identity = find_identity(q)
    c = q.cells
    if identity is None or not bool((c[c] == c[:, c]).all()):
        raise NotAGroupError()

    ldiv = parastrophe(q, OperationKind.LDIV).cells
    members, flags = list(subset.members), subset.to_array()
    mul_closed = _closed(c, members, flags)
    inverses_inside = all(int(ldiv[x, identity]) in subset for x in members)

    return GroupCriterion(
        is_subloop=is_subquasigroup(q, subset) and identity in subset,
        is_subgroup=identity in subset and mul_closed and inverses_inside,
        rdiv_closed=is_closed(q, OperationKind.RDIV, subset),
        ldiv_closed=is_closed(q, OperationKind.LDIV, subset),
    )
