"""Cosets, coset soft sets, quotient families and the distributive batteries"""

import logging
from dataclasses import dataclass
from typing import Optional

from quasisoft_cli.algebra.congruence import Congruence, is_normal_subquasigroup, quotient
from quasisoft_cli.algebra.core import (
    OperationKind,
    Side,
    ValidatedQuasigroup,
    is_flexible,
    is_idempotent,
    is_left_distributive,
    is_right_distributive,
    nuclei,
    parastrophe,
    properties,
)
from quasisoft_cli.algebra.isomorphism import are_isomorphic
from quasisoft_cli.algebra.softquasigroup import (
    SoftQuasigroup,
    classify,
    require_soft_quasigroup,
)
from quasisoft_cli.algebra.softset import SoftSet
from quasisoft_cli.algebra.subalgebra import all_subquasigroups, induced, is_subquasigroup
from quasisoft_cli.algebra.subsets import SubsetMask, format_subset
from quasisoft_cli.config import Settings
from quasisoft_cli.errors import EmptySubsetError, NotDistributiveError, NotNormalError
from quasisoft_cli.schemas import Report

logger = logging.getLogger(__name__)


def translate_subset(
    q: ValidatedQuasigroup, subset: SubsetMask, x: int, side: Side
) -> SubsetMask:
    """x·H on the left, H·x on the right."""
    if subset.is_empty:
        raise EmptySubsetError()
    members = list(subset.members)
    images = q.cells[x, members] if side is Side.LEFT else q.cells[members, x]
    return SubsetMask.from_indices(q.n, images.tolist())


def coset_soft(sq: SoftQuasigroup, x: int, side: Side) -> SoftSet:
    """Parameterwise translate: a ↦ x·F(a) or a ↦ F(a)·x."""
    require_soft_quasigroup(sq)
    return sq.soft.with_values([translate_subset(sq.base, v, x, side) for v in sq.soft.values])


@dataclass(frozen=True)
class CosetFamily:
    side: Side
    source: SoftQuasigroup
    members: tuple[SoftSet, ...]

    def member(self, x: int) -> SoftSet:
        return self.members[x]


def coset_family(sq: SoftQuasigroup, side: Side) -> CosetFamily:
    """One coset soft set per element, in carrier order."""
    members = tuple(coset_soft(sq, x, side) for x in range(sq.base.n))
    return CosetFamily(side, sq, members)


def coset_correspondence(
    q: ValidatedQuasigroup, subset: SubsetMask, theta: Congruence, side: Side
) -> bool:
    """Whether x·H ↦ [x] (or H·x ↦ [x]) is a well-defined bijection onto the blocks."""
    image: dict[SubsetMask, int] = {}
    for x in range(q.n):
        coset = translate_subset(q, subset, x, side)
        block = theta.labels[x]
        if image.setdefault(coset, block) != block:
            return False
    return len(set(image.values())) == len(image) == theta.block_count


def is_normal_soft(sq: SoftQuasigroup) -> bool:
    """Whether every value of a soft quasigroup is a normal subquasigroup."""
    require_soft_quasigroup(sq)
    return all(is_normal_subquasigroup(sq.base, v) is not None for v in sq.soft.values)


@dataclass(frozen=True)
class QuotientEntry:
    """Quotient by θ_{F(a)} with each block labelled by a coset."""

    parameter: str
    congruence: Congruence
    quotient: ValidatedQuasigroup
    coset_labels: tuple[SubsetMask, ...]
    bijective: bool
    is_commutative: bool
    is_distributive: bool


@dataclass(frozen=True)
class QuotientFamily:
    side: Side
    entries: tuple[QuotientEntry, ...]


def quotient_family(sq: SoftQuasigroup, side: Side) -> QuotientFamily:
    """Per-parameter quotients; both sides share θ and differ in coset labelling.

    Raises:
        NotNormalError: Naming the first parameter whose value is not normal
    """
    require_soft_quasigroup(sq)
    base = sq.base
    entries = []
    for a, value in sq.soft.items():
        theta = is_normal_subquasigroup(base, value)
        if theta is None:
            raise NotNormalError(
                f"value of '{a}' is not a normal subquasigroup", parameter=a
            )
        q_theta = quotient(base, theta)
        report = properties(q_theta)
        reps = sorted(set(theta.labels))
        entries.append(
            QuotientEntry(
                parameter=a,
                congruence=theta,
                quotient=q_theta,
                coset_labels=tuple(translate_subset(base, value, r, side) for r in reps),
                bijective=coset_correspondence(base, value, theta, side),
                is_commutative=report.is_commutative,
                is_distributive=report.is_distributive,
            )
        )
    return QuotientFamily(side, tuple(entries))


def _require_distributive(q: ValidatedQuasigroup) -> None:
    c = q.cells
    if not (is_left_distributive(c) and is_right_distributive(c)):
        raise NotDistributiveError()


class _IsoCache:
    def __init__(self, q: ValidatedQuasigroup, bound: int) -> None:
        self.q = q
        self.bound = bound
        self._induced: dict[SubsetMask, ValidatedQuasigroup] = {}
        self._verdicts: dict[tuple[SubsetMask, SubsetMask], bool] = {}

    def induced(self, subset: SubsetMask) -> ValidatedQuasigroup:
        if subset not in self._induced:
            self._induced[subset] = induced(self.q, subset)
        return self._induced[subset]

    def isomorphic(self, h: SubsetMask, k: SubsetMask) -> bool:
        key = (h, k) if h.sort_key() <= k.sort_key() else (k, h)
        if key not in self._verdicts:
            if not (is_subquasigroup(self.q, h) and is_subquasigroup(self.q, k)):
                return False
            witness = are_isomorphic(self.induced(key[0]), self.induced(key[1]), self.bound)
            self._verdicts[key] = witness is not None
        return self._verdicts[key]


def verify_coset_theorems(sq: SoftQuasigroup, settings: Optional[Settings] = None) -> Report:
    """Coset families of a soft quasigroup over a distributive base.

    Checks that every family member is a distributive soft quasigroup, that
    F, its left cosets and its right cosets are parameterwise isomorphic, and
    that cosets of a normal soft quasigroup are normal.

    Raises:
        NotDistributiveError: If the base is not distributive
    """
    settings = settings or Settings()
    require_soft_quasigroup(sq)
    _require_distributive(sq.base)
    base, symbols = sq.base, sq.base.symbols
    report = Report()
    iso = _IsoCache(base, settings.iso_bound)
    families = {side: coset_family(sq, side) for side in Side}

    checked = 0
    for side, family in families.items():
        for x, member in enumerate(family.members):
            checked += 1
            if not classify(base, member).is_soft_quasigroup:
                report.fail(
                    "coset families",
                    "coset soft set is not a soft quasigroup",
                    side=side.value,
                    element=symbols[x],
                )
    report.section("coset families").add("members checked", checked)

    pairs = 0
    left, right = families[Side.LEFT], families[Side.RIGHT]
    for x in range(base.n):
        for a, value in sq.soft.items():
            lx, rx = left.member(x).value(a), right.member(x).value(a)
            comparisons = (("F vs xF", value, lx), ("F vs Fx", value, rx), ("xF vs Fx", lx, rx))
            for name, h, k in comparisons:
                pairs += 1
                if not iso.isomorphic(h, k):
                    report.fail(
                        "coset isomorphism",
                        f"{name} not isomorphic",
                        parameter=a,
                        element=symbols[x],
                        first=format_subset(symbols, h),
                        second=format_subset(symbols, k),
                    )
    report.section("coset isomorphism").add("pairs checked", pairs)

    normal = all(is_normal_subquasigroup(base, v) is not None for v in sq.soft.values)
    block = report.section("coset normality").add("source normal", normal)
    if normal:
        for side, family in families.items():
            for x, member in enumerate(family.members):
                for a, value in member.items():
                    if (
                        not is_subquasigroup(base, value)
                        or is_normal_subquasigroup(base, value) is None
                    ):
                        report.fail(
                            "coset normality",
                            "coset of a normal value is not normal",
                            side=side.value,
                            element=symbols[x],
                            parameter=a,
                        )
        block.add("members checked", len(families) * base.n)
    return report


def verify_distributive_theorems(
    q: ValidatedQuasigroup, settings: Optional[Settings] = None
) -> Report:
    """Base-level consequences of distributivity, checked on every subquasigroup.

    Raises:
        NotDistributiveError: If q is not distributive
    """
    settings = settings or Settings()
    _require_distributive(q)
    symbols = q.symbols
    report = Report()

    laws = report.section("distributive laws")
    c = q.cells
    laws.add("idempotent", is_idempotent(c)).add("flexible", is_flexible(c))
    if not (is_idempotent(c) and is_flexible(c)):
        report.fail("distributive laws", "distributive table is not idempotent and flexible")
    for kind in OperationKind:
        d = parastrophe(q, kind).cells
        holds = is_left_distributive(d) and is_right_distributive(d)
        laws.add(f"{kind.value} distributive", holds)
        if not holds:
            report.fail("distributive laws", "parastrophe is not distributive", kind=kind.value)

    nuc = nuclei(q, settings.predicate_bound)
    laws.add("left nucleus", format_subset(symbols, nuc.left))
    laws.add("right nucleus", format_subset(symbols, nuc.right))
    if q.n > 1 and not (nuc.left.is_empty and nuc.right.is_empty):
        report.fail("distributive laws", "nucleus is not empty")

    subs = all_subquasigroups(q, settings.enumeration_bound, settings.scan_threshold)
    iso = _IsoCache(q, settings.iso_bound)
    cosets = 0
    for h in subs:
        for x in range(q.n):
            for side in Side:
                coset = translate_subset(q, h, x, side)
                cosets += 1
                if not is_subquasigroup(q, coset):
                    report.fail(
                        "cosets",
                        "coset is not a subquasigroup",
                        subset=format_subset(symbols, h),
                        element=symbols[x],
                        side=side.value,
                    )
                elif not iso.isomorphic(h, coset):
                    report.fail(
                        "cosets",
                        "coset is not isomorphic to its subquasigroup",
                        subset=format_subset(symbols, h),
                        element=symbols[x],
                        side=side.value,
                    )
    report.section("cosets").add("subquasigroups", len(subs)).add("cosets checked", cosets)

    normal_count = 0
    for h in subs:
        theta = is_normal_subquasigroup(q, h)
        if theta is None:
            continue
        normal_count += 1
        label = format_subset(symbols, h)
        for x in range(q.n):
            for side in Side:
                coset = translate_subset(q, h, x, side)
                if not is_subquasigroup(q, coset) or is_normal_subquasigroup(q, coset) is None:
                    report.fail(
                        "normality",
                        "coset of a normal subquasigroup is not normal",
                        subset=label,
                        element=symbols[x],
                        side=side.value,
                    )
        q_theta = quotient(q, theta)
        quotient_report = properties(q_theta, settings.predicate_bound)
        if not (quotient_report.is_commutative and quotient_report.is_distributive):
            report.fail("normality", "quotient is not commutative and distributive", subset=label)
        if q_theta.n * h.cardinality != q.n:
            report.fail("normality", "quotient order times subset order differs", subset=label)
        for side in Side:
            if not coset_correspondence(q, h, theta, side):
                report.fail(
                    "normality", "coset to block map is not a bijection", subset=label,
                    side=side.value,
                )
    report.section("normality").add("normal subquasigroups", normal_count)
    logger.info("distributive battery: %d counterexamples", len(report.counterexamples))
    return report
