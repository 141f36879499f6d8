"""Isomorphism search between small quasigroups"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from quasisoft_cli.algebra.core import CayleyTable, Permutation, ValidatedQuasigroup, validate
from quasisoft_cli.config import DEFAULT_ISO_BOUND
from quasisoft_cli.errors import BoundExceededError

logger = logging.getLogger(__name__)

Signature = tuple[bool, int, int, int, int]


@dataclass(frozen=True)
class IsoWitness:
    """A bijection φ with φ(x·y) = φ(x)∘φ(y), images indexed by the first carrier."""

    bijection: Permutation

    def __call__(self, x: int) -> int:
        return self.bijection(x)

    def inverse(self) -> "IsoWitness":
        return IsoWitness(self.bijection.inverse())


def _square_orbit(c: np.ndarray, x: int) -> int:
    seen = []
    while x not in seen:
        seen.append(x)
        x = int(c[x, x])
    return len(seen)


def _signatures(c: np.ndarray) -> list[Signature]:
    """Per-element invariants preserved by every isomorphism."""
    n = c.shape[0]
    ar = np.arange(n)
    commuting = (c == c.T).sum(axis=1)
    left_fixed = (c == ar[None, :]).sum(axis=1)
    right_fixed = (c == ar[:, None]).sum(axis=0)
    return [
        (
            bool(c[x, x] == x),
            int(commuting[x]),
            int(left_fixed[x]),
            int(right_fixed[x]),
            _square_orbit(c, x),
        )
        for x in range(n)
    ]


def is_homomorphism(c1: np.ndarray, c2: np.ndarray, images: np.ndarray) -> bool:
    return bool(np.array_equal(images[c1], c2[np.ix_(images, images)]))


class _Search:
    """Backtracking over images; each assignment forces the images of its products."""

    def __init__(self, c1: np.ndarray, c2: np.ndarray) -> None:
        self.c1 = c1
        self.c2 = c2
        self.n = c1.shape[0]
        self.sig1 = _signatures(c1)
        self.sig2 = _signatures(c2)
        self.candidates = {
            x: [u for u in range(self.n) if self.sig2[u] == self.sig1[x]] for x in range(self.n)
        }
        self.nodes = 0

    def _propagate(self, phi: dict[int, int], used: set[int], x: int, u: int) -> bool:
        queue = [(x, u)]
        while queue:
            x, u = queue.pop()
            if x in phi:
                if phi[x] != u:
                    return False
                continue
            if u in used or self.sig1[x] != self.sig2[u]:
                return False
            phi[x] = u
            used.add(u)
            for y in list(phi):
                queue.append((int(self.c1[x, y]), int(self.c2[u, phi[y]])))
                queue.append((int(self.c1[y, x]), int(self.c2[phi[y], u])))
        return True

    def run(self, phi: dict[int, int], used: set[int]) -> Optional[dict[int, int]]:
        if len(phi) == self.n:
            return phi
        self.nodes += 1
        # most constrained unassigned element first
        x = min(
            (y for y in range(self.n) if y not in phi),
            key=lambda y: (len(self.candidates[y]), y),
        )
        for u in self.candidates[x]:
            if u in used:
                continue
            trial, trial_used = dict(phi), set(used)
            if self._propagate(trial, trial_used, x, u):
                found = self.run(trial, trial_used)
                if found is not None:
                    return found
        return None


def are_isomorphic(
    q1: ValidatedQuasigroup, q2: ValidatedQuasigroup, bound: int = DEFAULT_ISO_BOUND
) -> Optional[IsoWitness]:
    """A witness isomorphism from q1 onto q2, or None when none exists.

    Raises:
        BoundExceededError: If the carriers are larger than `bound`
    """
    if q1.n != q2.n:
        return None
    if q1.n > bound:
        raise BoundExceededError("isomorphism search", q1.n, bound)
    search = _Search(q1.cells, q2.cells)
    if sorted(search.sig1) != sorted(search.sig2):
        logger.debug("isomorphism refuted by element signatures")
        return None
    phi = search.run({}, set())
    logger.debug("isomorphism search visited %d nodes", search.nodes)
    if phi is None:
        return None
    images = np.array([phi[x] for x in range(q1.n)], dtype=np.intp)
    if not is_homomorphism(q1.cells, q2.cells, images):
        return None
    return IsoWitness(Permutation(tuple(images.tolist())))


def relabel(q: ValidatedQuasigroup, perm: Permutation) -> ValidatedQuasigroup:
    """The isomorphic copy in which element x is renamed perm(x)."""
    if len(perm.images) != q.n:
        raise ValueError(f"permutation of {len(perm.images)} points for a carrier of {q.n}")
    p = np.array(perm.images, dtype=np.intp)
    cells = np.empty_like(q.cells)
    cells[np.ix_(p, p)] = p[q.cells]
    return validate(CayleyTable(cells, q.symbols))
