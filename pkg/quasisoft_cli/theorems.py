"""Theorem batteries run by the suite command"""

import logging
from typing import Callable, Optional

import numpy as np

from quasisoft_cli.algebra.core import (
    OperationKind,
    Side,
    ValidatedQuasigroup,
    distributive_identities,
    latin_defects,
    parastrophe,
    properties,
)
from quasisoft_cli.algebra.cosets import (
    is_normal_soft,
    quotient_family,
    verify_coset_theorems,
    verify_distributive_theorems,
)
from quasisoft_cli.algebra.softquasigroup import (
    SoftQuasigroup,
    amgm_holds,
    classify,
    is_distributive_soft,
    metrics,
    nuclear_check,
    parastrophe_metric_equality,
    soft_group_criterion,
    soft_quasigroup_criterion,
    verify_six_equivalences,
)
from quasisoft_cli.algebra.softset import SoftSet
from quasisoft_cli.algebra.subalgebra import (
    all_subquasigroups,
    check_parastrophe_invariance,
    closure,
    group_criterion,
)
from quasisoft_cli.algebra.subsets import SubsetMask, format_subset
from quasisoft_cli.config import Settings
from quasisoft_cli.errors import BoundExceededError
from quasisoft_cli.schemas import PropertyReport, Report, Section

logger = logging.getLogger(__name__)


class SuiteContext:
    """Inputs shared by every battery"""

    def __init__(
        self, q: ValidatedQuasigroup, soft: Optional[SoftSet], settings: Settings
    ) -> None:
        self.q = q
        self.soft = soft
        self.settings = settings
        self.props: Optional[PropertyReport] = None
        self.props_refused: Optional[str] = None
        try:
            self.props = properties(q, settings.predicate_bound)
        except BoundExceededError as e:
            self.props_refused = str(e)
            logger.info("base properties refused: %s", e)
        self.sq: Optional[SoftQuasigroup] = classify(q, soft) if soft is not None else None


def parastrophe_battery(ctx: SuiteContext, report: Report) -> None:
    """Derived tables are Latin, satisfy the defining identities and invert correctly."""
    q, c = ctx.q, ctx.q.cells
    ar = np.arange(q.n)
    section = report.section("parastrophes")
    for kind in OperationKind:
        latin = not latin_defects(parastrophe(q, kind).table)
        section.add(f"{kind.value} latin", latin)
        if not latin:
            report.fail("parastrophes", "derived table is not Latin", kind=kind.value)

    ld = parastrophe(q, OperationKind.LDIV).cells
    rd = parastrophe(q, OperationKind.RDIV).cells
    columns = np.broadcast_to(ar[None, :], (q.n, q.n))
    rows = np.broadcast_to(ar[:, None], (q.n, q.n))
    identities = {
        "x·(x\\y) = y": np.array_equal(c[ar[:, None], ld], columns),
        "(x/y)·y = x": np.array_equal(c[rd, ar[None, :]], rows),
        "x⊛y = y·x": np.array_equal(parastrophe(q, OperationKind.OPP).cells, c.T),
        "x//y = y/x": np.array_equal(parastrophe(q, OperationKind.ORDIV).cells, rd.T),
        "x\\\\y = y\\x": np.array_equal(parastrophe(q, OperationKind.OLDIV).cells, ld.T),
    }
    for name, holds in identities.items():
        section.add(name, bool(holds))
        if not holds:
            report.fail("parastrophes", "defining identity fails", identity=name)

    for kind in (OperationKind.OPP, OperationKind.LDIV, OperationKind.RDIV):
        twice = parastrophe(parastrophe(q, kind), kind)
        involutive = np.array_equal(twice.cells, c) and twice.op_kind is OperationKind.MUL
        section.add(f"{kind.value} twice", "base" if involutive else "other")
        if not involutive:
            report.fail(
                "parastrophes", "deriving twice does not return the base", kind=kind.value
            )


def subalgebra_battery(ctx: SuiteContext, report: Report) -> None:
    """Subquasigroups are closed, invariant across parastrophes, and enumerate identically."""
    q, settings = ctx.q, ctx.settings
    subs = all_subquasigroups(q, settings.enumeration_bound, settings.scan_threshold)
    section = report.section("subquasigroups").add("count", len(subs))
    for h in subs:
        label = format_subset(q.symbols, h)
        if closure(q, h) != h:
            report.fail("subquasigroups", "closure moves a subquasigroup", subset=label)
        if not check_parastrophe_invariance(q, h):
            report.fail("subquasigroups", "not a subquasigroup of every parastrophe", subset=label)
    for kind in OperationKind:
        derived = all_subquasigroups(
            parastrophe(q, kind), settings.enumeration_bound, settings.scan_threshold
        )
        same = derived == subs
        section.add(f"{kind.value} enumeration matches", same)
        if not same:
            report.fail("subquasigroups", "enumeration differs", kind=kind.value)


def group_battery(ctx: SuiteContext, report: Report) -> None:
    """The four subgroup views agree on every non-empty subset."""
    q = ctx.q
    checked = 0
    for bits in range(1, 1 << q.n):
        subset = SubsetMask(q.n, bits)
        criterion = group_criterion(q, subset)
        checked += 1
        if not criterion.agree:
            report.fail(
                "group criteria",
                "subgroup views disagree",
                subset=format_subset(q.symbols, subset),
                **criterion.model_dump(),
            )
    report.section("group criteria").add("subsets checked", checked)


def distributive_battery(ctx: SuiteContext, report: Report) -> None:
    identities = distributive_identities(ctx.q, ctx.settings.predicate_bound)
    section = report.section("distributive identities")
    for key, holds in identities.model_dump().items():
        section.add(key, holds)
        if not holds:
            report.fail("distributive identities", "identity fails", identity=key)
    report.absorb(verify_distributive_theorems(ctx.q, ctx.settings))


def soft_battery(ctx: SuiteContext, report: Report) -> None:
    """Classification agrees across criteria and parastrophes; metrics are invariant."""
    q, soft, sq = ctx.q, ctx.soft, ctx.sq
    props = ctx.props
    assert soft is not None and sq is not None and props is not None
    section = report.section("soft quasigroup").add("class", sq.soft_class.label)

    six = verify_six_equivalences(q, soft)
    section.add("six operations agree", six)
    if not six:
        report.fail("soft quasigroup", "status differs between parastrophes")
    criterion = soft_quasigroup_criterion(q, soft)
    section.add("groupoid criterion", criterion)
    if criterion != sq.is_soft_quasigroup:
        report.fail("soft quasigroup", "groupoid criterion disagrees with classification")
    if not sq.is_soft_quasigroup:
        return

    m = metrics(sq)
    equal = parastrophe_metric_equality(sq)
    section.add("metrics invariant", equal).add("am >= gm", amgm_holds(m))
    if not equal:
        report.fail("soft quasigroup", "metrics differ between parastrophes")
    if not amgm_holds(m):
        report.fail("soft quasigroup", "arithmetic mean below geometric mean")

    nuclear = nuclear_check(sq, ctx.settings.predicate_bound)
    section.add("left nuclear", nuclear.is_left_nuclear)
    section.add("right nuclear", nuclear.is_right_nuclear)

    if props.is_group:
        flags = soft_group_criterion(q, soft)
        section.add("group views agree", flags.agree)
        if not flags.agree:
            report.fail("soft quasigroup", "soft group views disagree", **flags.model_dump())

    if not props.is_distributive:
        return
    dist = is_distributive_soft(sq, ctx.settings.predicate_bound)
    section.add("corollaries hold", dist.corollaries_hold)
    if not dist.corollaries_hold:
        report.fail("soft quasigroup", "parastrophe of distributive soft quasigroup fails a law")
    if q.n > 1 and (nuclear.is_left_nuclear or nuclear.is_right_nuclear):
        report.fail("soft quasigroup", "distributive soft quasigroup is nuclear")

    report.absorb(verify_coset_theorems(sq, ctx.settings))
    if is_normal_soft(sq):
        quotients = report.section("quotient families")
        for side in Side:
            family = quotient_family(sq, side)
            for entry in family.entries:
                ok = entry.bijective and entry.is_commutative and entry.is_distributive
                quotients.add(f"{side.value} {entry.parameter}", f"order {entry.quotient.n}")
                if not ok:
                    report.fail(
                        "quotient families",
                        "quotient is not a commutative distributive image of the cosets",
                        side=side.value,
                        parameter=entry.parameter,
                    )


Applicability = Callable[[SuiteContext], Optional[str]]


def _group_applies(ctx: SuiteContext) -> Optional[str]:
    if ctx.props is None:
        return ctx.props_refused
    if not ctx.props.is_group:
        return "base is not a group"
    if ctx.q.n > ctx.settings.scan_threshold:
        return "carrier exceeds scan threshold"
    return None


def _distributive_applies(ctx: SuiteContext) -> Optional[str]:
    if ctx.props is None:
        return ctx.props_refused
    return None if ctx.props.is_distributive else "base is not distributive"


def _soft_applies(ctx: SuiteContext) -> Optional[str]:
    if ctx.soft is None:
        return "no soft set given"
    return ctx.props_refused if ctx.props is None else None


BATTERIES: list[tuple[str, Applicability, Callable[[SuiteContext, Report], None]]] = [
    ("parastrophes", lambda ctx: None, parastrophe_battery),
    (
        "subquasigroups",
        lambda ctx: "carrier exceeds enumeration bound"
        if ctx.q.n > ctx.settings.enumeration_bound
        else None,
        subalgebra_battery,
    ),
    ("group criteria", _group_applies, group_battery),
    ("distributive", _distributive_applies, distributive_battery),
    ("soft", _soft_applies, soft_battery),
]


def run_suite(
    q: ValidatedQuasigroup, soft: Optional[SoftSet] = None, settings: Optional[Settings] = None
) -> Report:
    """Run every applicable battery, listing skipped ones with the reason.

    Each battery writes to its own report, merged only when it completes, so a
    battery refused by a bound midway leaves nothing behind.
    """
    ctx = SuiteContext(q, soft, settings or Settings())
    report = Report()
    ran, skipped = [], []
    for name, applies, battery in BATTERIES:
        reason = applies(ctx)
        if reason is None:
            scratch = Report()
            try:
                battery(ctx, scratch)
            except BoundExceededError as e:
                reason = str(e)
            else:
                report.absorb(scratch)
                ran.append(name)
        if reason is not None:
            skipped.append((name, reason))
        logger.info("battery %s: %s", name, reason or "ran")
    summary = Section(title="suite")
    report.sections.insert(0, summary)
    summary.add("ran", ", ".join(ran) or "-")
    for name, reason in skipped:
        summary.add(f"skipped {name}", reason)
    return report
