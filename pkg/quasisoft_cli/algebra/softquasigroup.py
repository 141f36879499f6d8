"""Soft quasigroups: classification, parastrophes, laws and metrics"""

import logging
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from enum import IntEnum
from fractions import Fraction
from math import prod

import numpy as np

from quasisoft_cli.algebra.core import (
    OperationKind,
    ValidatedQuasigroup,
    is_flexible,
    is_idempotent,
    is_left_distributive,
    is_right_distributive,
    nuclei,
    parastrophe,
)
from quasisoft_cli.algebra.softset import SoftSet
from quasisoft_cli.algebra.subalgebra import (
    CLOSURE_KINDS,
    group_criterion,
    is_closed,
    is_subquasigroup,
)
from quasisoft_cli.algebra.subsets import SubsetMask
from quasisoft_cli.config import DEFAULT_PREDICATE_BOUND
from quasisoft_cli.errors import BoundExceededError, PreconditionError, UniverseMismatchError
from quasisoft_cli.schemas import (
    DistributiveSoftReport,
    NuclearReport,
    ParameterClass,
    ParastropheLaws,
    SoftGroupCriterion,
)

logger = logging.getLogger(__name__)


class SoftClass(IntEnum):
    """Strongest structure shared by every value, weakest first."""

    NONE = 0
    GROUPOID = 1
    QUASIGROUP = 2
    LOOP = 3
    GROUP = 4

    @property
    def label(self) -> str:
        if self is SoftClass.NONE:
            return "not a soft groupoid"
        return f"soft {self.name.lower()}"


@dataclass(frozen=True)
class SoftQuasigroup:
    """A soft set over a base quasigroup with its per-parameter classification."""

    base: ValidatedQuasigroup
    soft: SoftSet
    parameters: tuple[ParameterClass, ...]
    soft_class: SoftClass

    @property
    def is_soft_quasigroup(self) -> bool:
        return self.soft_class >= SoftClass.QUASIGROUP


def _require_universe(base: ValidatedQuasigroup, soft: SoftSet) -> None:
    if soft.n != base.n:
        raise UniverseMismatchError(base.n, soft.n)


def require_soft_quasigroup(sq: SoftQuasigroup) -> None:
    if not sq.is_soft_quasigroup:
        raise PreconditionError(f"soft set is a {sq.soft_class.label}, not a soft quasigroup")


def _classify_value(base: ValidatedQuasigroup, name: str, value: SubsetMask) -> ParameterClass:
    groupoid = is_closed(base, OperationKind.MUL, value)
    quasigroup = groupoid and is_subquasigroup(base, value)
    loop = group = False
    if quasigroup:
        members = list(value.members)
        block = base.cells[np.ix_(members, members)]
        local = np.arange(len(members))
        # relabel the induced table onto 0..k-1
        lookup = np.full(base.n, -1, dtype=np.intp)
        lookup[members] = local
        induced = lookup[block]
        loop = any(
            np.array_equal(induced[e], local) and np.array_equal(induced[:, e], local)
            for e in local
        )
        group = loop and bool((induced[induced] == induced[:, induced]).all())
    return ParameterClass(
        parameter=name, groupoid=groupoid, quasigroup=quasigroup, loop=loop, group=group
    )


def classify(base: ValidatedQuasigroup, soft: SoftSet) -> SoftQuasigroup:
    """Classify every value of a soft set against the base operation.

    Raises:
        UniverseMismatchError: If the soft set lives over another carrier
    """
    _require_universe(base, soft)
    parameters = tuple(_classify_value(base, a, value) for a, value in soft.items())
    soft_class = SoftClass.NONE
    for level, flag in (
        (SoftClass.GROUPOID, "groupoid"),
        (SoftClass.QUASIGROUP, "quasigroup"),
        (SoftClass.LOOP, "loop"),
        (SoftClass.GROUP, "group"),
    ):
        if all(getattr(p, flag) for p in parameters):
            soft_class = level
    logger.debug("classified %d parameters as %s", len(parameters), soft_class.label)
    return SoftQuasigroup(base, soft, parameters, soft_class)


def soft_parastrophe(sq: SoftQuasigroup, kind: OperationKind) -> SoftQuasigroup:
    """The same soft set over the `kind` parastrophe of the base."""
    require_soft_quasigroup(sq)
    if kind is OperationKind.MUL:
        return sq
    return classify(parastrophe(sq.base, kind), sq.soft)


def verify_six_equivalences(base: ValidatedQuasigroup, soft: SoftSet) -> bool:
    """Soft-quasigroup status is the same under all six operations."""
    _require_universe(base, soft)
    statuses = {
        all(is_subquasigroup(parastrophe(base, kind), v) for v in soft.values)
        for kind in OperationKind
    }
    return len(statuses) == 1


def soft_quasigroup_criterion(base: ValidatedQuasigroup, soft: SoftSet) -> bool:
    """Soft groupoid under multiplication and both divisions at once."""
    _require_universe(base, soft)
    return all(is_closed(base, kind, v) for kind in CLOSURE_KINDS for v in soft.values)


def soft_group_criterion(base: ValidatedQuasigroup, soft: SoftSet) -> SoftGroupCriterion:
    """Raises NotAGroupError unless the base is a group table."""
    _require_universe(base, soft)
    per_value = [group_criterion(base, v) for v in soft.values]
    return SoftGroupCriterion(
        soft_group=all(c.is_subgroup for c in per_value),
        soft_loop=all(c.is_subloop for c in per_value),
        rdiv_soft_groupoid=all(c.rdiv_closed for c in per_value),
        ldiv_soft_groupoid=all(c.ldiv_closed for c in per_value),
    )


def soft_subquasigroup_of(f: SoftQuasigroup, g: SoftQuasigroup) -> bool:
    """params(F) ⊆ params(G) and each F(a) a subquasigroup of G(a)."""
    if f.base != g.base:
        raise PreconditionError("soft quasigroups are over different bases")
    other = g.soft.as_dict()
    for a, value in f.soft.items():
        if a not in other or not value <= other[a]:
            return False
        if not (is_subquasigroup(f.base, value) and is_subquasigroup(g.base, other[a])):
            return False
    return True


@dataclass(frozen=True, eq=False)
class GeometricMean:
    """The exact value product^(1/degree)."""

    product: int
    degree: int

    def __post_init__(self) -> None:
        if self.product < 1 or self.degree < 1:
            raise ValueError("product and degree must be positive")

    def reduced(self) -> tuple[int, int]:
        """Smallest degree d' and integer r with r^(1/d') equal to this value."""
        for k in range(self.degree, 1, -1):
            if self.degree % k:
                continue
            root = _integer_root(self.product, k)
            if root is not None:
                return root, self.degree // k
        return self.product, self.degree

    @property
    def is_integer(self) -> bool:
        return self.reduced()[1] == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeometricMean):
            return NotImplemented
        return self.product**other.degree == other.product**self.degree

    def __hash__(self) -> int:
        return hash(self.reduced())

    def decimal(self, places: int = 4) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = 40
            value = Decimal(self.product) ** (Decimal(1) / Decimal(self.degree))
            return value.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)

    def __str__(self) -> str:
        root, degree = self.reduced()
        if degree == 1:
            return str(root)
        return f"{self.product}^(1/{self.degree})"


def _integer_root(value: int, k: int) -> int | None:
    """Exact k-th root of a positive integer, or None when it is not a perfect power."""
    x = 1 << -(-value.bit_length() // k)
    while True:
        y = ((k - 1) * x + value // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == value else None


@dataclass(frozen=True)
class Metrics:
    """Order, arithmetic mean and geometric mean of the value sizes."""

    order_raw: int
    order_distinct_proper: int
    am: Fraction
    gm: GeometricMean


def metrics(sq: SoftQuasigroup) -> Metrics:
    require_soft_quasigroup(sq)
    sizes = [v.cardinality for v in sq.soft.values]
    distinct_proper = {v for v in sq.soft.values if not v.is_full}
    return Metrics(
        order_raw=sum(sizes),
        order_distinct_proper=sum(v.cardinality for v in distinct_proper),
        am=Fraction(sum(sizes), len(sizes)),
        gm=GeometricMean(prod(sizes), len(sizes)),
    )


def amgm_holds(m: Metrics) -> bool:
    """AM ≥ GM, decided as S^k ≥ P·k^k."""
    k = m.gm.degree
    return m.order_raw**k >= m.gm.product * k**k


def parastrophe_metric_equality(sq: SoftQuasigroup) -> bool:
    reference = metrics(sq)
    return all(metrics(soft_parastrophe(sq, kind)) == reference for kind in OperationKind)


def is_distributive_soft(
    sq: SoftQuasigroup, bound: int = DEFAULT_PREDICATE_BOUND
) -> DistributiveSoftReport:
    """Distributivity of the base, and when it holds, the laws of all six soft parastrophes.

    Idempotent and flexible soft quasigroups are read as: the base satisfies
    the law, so every subquasigroup value inherits it.
    """
    require_soft_quasigroup(sq)
    if sq.base.n > bound:
        raise BoundExceededError("distributivity", sq.base.n, bound)
    c = sq.base.cells
    distributive = is_left_distributive(c) and is_right_distributive(c)
    report = DistributiveSoftReport(distributive=distributive)
    if not distributive:
        return report
    for kind in OperationKind:
        derived = soft_parastrophe(sq, kind)
        d = derived.base.cells
        report.corollaries.append(
            ParastropheLaws(
                kind=kind.value,
                soft_quasigroup=derived.is_soft_quasigroup,
                distributive=is_left_distributive(d) and is_right_distributive(d),
                idempotent=is_idempotent(d),
                flexible=is_flexible(d),
            )
        )
    return report


def nuclear_check(sq: SoftQuasigroup, bound: int = DEFAULT_PREDICATE_BOUND) -> NuclearReport:
    """Whether some soft value equals the left or right nucleus of the base."""
    nuc = nuclei(sq.base, bound)
    return NuclearReport(
        is_left_nuclear=any(v == nuc.left for v in sq.soft.values),
        is_right_nuclear=any(v == nuc.right for v in sq.soft.values),
    )
