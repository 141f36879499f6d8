"""CLI entry point for quasisoft"""

import logging
import sys
from pathlib import Path
from typing import NoReturn, Optional

import typer

from quasisoft_cli.algebra.congruence import (
    all_normal_congruences,
    format_congruence,
    generated_normal_congruence,
    is_normal_congruence,
    is_normal_subquasigroup,
    parse_congruence,
    quotient,
)
from quasisoft_cli.algebra.core import (
    OperationKind,
    Side,
    ValidatedQuasigroup,
    parastrophe,
    parastrophe_classes,
    properties,
    validate,
)
from quasisoft_cli.algebra.cosets import coset_family, quotient_family
from quasisoft_cli.algebra.fixtures import list_fixtures, resolve_soft_set, resolve_table
from quasisoft_cli.algebra.isomorphism import are_isomorphic
from quasisoft_cli.algebra.softquasigroup import (
    amgm_holds,
    classify,
    metrics,
    parastrophe_metric_equality,
    soft_subquasigroup_of,
)
from quasisoft_cli.algebra.softset import (
    SoftSet,
    extended_intersection,
    extended_union,
    restricted_intersection,
    soft_equal,
    soft_subset,
)
from quasisoft_cli.algebra.subalgebra import all_subquasigroups, closure_witness, is_subquasigroup
from quasisoft_cli.algebra.subsets import format_subset, parse_subset
from quasisoft_cli.config import Settings, load_settings
from quasisoft_cli.errors import (
    BoundExceededError,
    ConfigurationError,
    EmptySoftSetError,
    EmptySubsetError,
    FixtureError,
    LatinViolation,
    NotNormalError,
    PartitionError,
    PreconditionError,
    QuasiSoftError,
    TableParseError,
)
from quasisoft_cli.report import cayley_block, get_emitter
from quasisoft_cli.schemas import PropertyReport, Report, Section
from quasisoft_cli.theorems import run_suite

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
EXIT_FAILURE = 1
EXIT_USAGE = 2

logger = logging.getLogger("quasisoft")

app = typer.Typer()
soft_app = typer.Typer(help="Classify soft sets over a quasigroup")
app.add_typer(soft_app, name="soft")


def configure_logging(verbose: bool, log_file: Optional[Path]) -> None:
    """Send logs to stderr, and to a file when asked; reports go to stdout only."""
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file is not None:
        handlers.append(logging.FileHandler(log_file, mode="a"))
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def handle_command_error(error: Exception, command_name: str) -> NoReturn:
    """Handle errors from CLI commands with consistent output.

    Args:
        error: The exception that occurred
        command_name: Name of the command for logging
    """
    if isinstance(error, (TableParseError, FixtureError, ConfigurationError, PartitionError)):
        logger.error(f"{command_name} failed: {error}")
        typer.echo(f"Input error: {error}", err=True)
        typer.echo("\nRun 'quasisoft --help' to see available commands.", err=True)
        sys.exit(EXIT_USAGE)
    elif isinstance(error, LatinViolation):
        logger.error(f"Invalid table in {command_name}: {len(error.defects)} defects")
        typer.echo(f"Invalid table: {error}", err=True)
        for defect in error.defects:
            typer.echo(f"  {defect.describe()}", err=True)
    elif isinstance(error, NotNormalError):
        logger.error(f"Normality required in {command_name}: {error}")
        typer.echo(f"Not normal: {error}", err=True)
        if error.parameter:
            typer.echo(f"Parameter: {error.parameter}", err=True)
    elif isinstance(error, BoundExceededError):
        logger.error(f"Bound exceeded in {command_name}: {error}")
        typer.echo(f"Refused: {error}", err=True)
        typer.echo("Raise the bound in a settings file passed with --config.", err=True)
    elif isinstance(error, EmptySoftSetError):
        logger.error(f"Empty soft set in {command_name}: {error}")
        typer.echo(f"Empty result: {error}", err=True)
        if error.dropped:
            typer.echo(f"Dropped parameters: {', '.join(error.dropped)}", err=True)
    elif isinstance(error, PreconditionError):
        logger.error(f"Precondition failed in {command_name}: {error}")
        typer.echo(f"Precondition failed: {error}", err=True)
    elif isinstance(error, QuasiSoftError):
        logger.error(f"Error in {command_name}: {error}")
        typer.echo(f"Error: {error}", err=True)
    else:
        logger.exception(f"Unexpected error in {command_name}")
        typer.echo(f"Unexpected error: {error}", err=True)
        typer.echo("Run again with --verbose --log-file PATH for details.", err=True)
    sys.exit(EXIT_FAILURE)


def finish(report: Report, json_output: bool) -> None:
    """Print the report and exit non-zero unless it passed."""
    typer.echo(get_emitter(json_output).emit(report))
    if report.status != "pass" or report.counterexamples:
        sys.exit(EXIT_FAILURE)


def get_settings(ctx: typer.Context) -> Settings:
    return ctx.obj if isinstance(ctx.obj, Settings) else Settings()


def load_quasigroup(reference: str) -> ValidatedQuasigroup:
    return validate(resolve_table(reference))


def add_properties(section: Section, q: ValidatedQuasigroup, props: PropertyReport) -> None:
    identity = q.symbols[props.identity] if props.identity is not None else "none"
    section.add("is_loop", props.is_loop).add("identity", identity)
    section.add("is_group", props.is_group).add("is_commutative", props.is_commutative)
    section.add("is_idempotent", props.is_idempotent).add("is_flexible", props.is_flexible)
    section.add("is_left_distributive", props.is_left_distributive)
    section.add("is_right_distributive", props.is_right_distributive)


def describe_soft_set(soft: SoftSet, symbols: tuple[str, ...], section: Section) -> None:
    for a, value in soft.items():
        section.add(a, format_subset(symbols, value))


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress at INFO level"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="Also append logs here"),
    config: Optional[Path] = typer.Option(None, "--config", help="YAML settings file"),
):
    """quasisoft: toolkit for finite quasigroups and soft quasigroups"""
    configure_logging(verbose, log_file)
    try:
        ctx.obj = load_settings(config)
    except Exception as e:
        handle_command_error(e, "settings")
    logger.info("quasisoft CLI started")
    if ctx.invoked_subcommand is None:
        typer.echo("Usage: quasisoft [OPTIONS] COMMAND [ARGS]...")
        typer.echo("\nAvailable commands:")
        typer.echo("  validate      Check that a table is a Latin square")
        typer.echo("  parastrophe   Derive parastrophe tables")
        typer.echo("  subs          Enumerate subquasigroups")
        typer.echo("  soft          Classify and measure soft sets (check, metrics, compare)")
        typer.echo("  cosets        Coset soft sets and quotient families")
        typer.echo("  congruences   Enumerate or check normal congruences")
        typer.echo("  quotient      Quotient by a normal subquasigroup")
        typer.echo("  iso           Search for an isomorphism between two tables")
        typer.echo("  suite         Run every applicable theorem battery")
        typer.echo("  fixtures      List built-in tables and soft sets")
        typer.echo("\nTables and soft sets are file paths or built-in fixture names.")
        typer.echo("\nExamples:")
        typer.echo("  quasisoft validate q6")
        typer.echo("  quasisoft soft check q6 q6-tower")
        typer.echo("  quasisoft suite z9-medial --json")
        raise typer.Exit()


@app.command("validate")
def validate_command(
    table: str = typer.Argument(..., help="Table file or fixture name"),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Check that a table is a Latin square and report its properties

    Examples:
      quasisoft validate q6            # valid order-6 quasigroup
      quasisoft validate q8-printed    # lists every repeated symbol
    """
    try:
        parsed = resolve_table(table)
        report = Report()
        section = report.section("table").add("order", parsed.n)
        section.add("symbols", " ".join(parsed.symbols))
        try:
            q = validate(parsed)
        except LatinViolation as e:
            section.add("latin", False)
            for defect in e.defects:
                report.fail(
                    "latin",
                    defect.describe(),
                    axis=defect.axis,
                    index=defect.index,
                    symbol=defect.symbol,
                    positions=" ".join(defect.positions),
                    missing=" ".join(defect.missing),
                )
            report.status = "invalid-input"
        else:
            section.add("latin", True)
            add_properties(report.section("properties"), q, properties(q))
            classes = report.section("parastrophe classes")
            for i, members in enumerate(parastrophe_classes(q), start=1):
                classes.add(f"class {i}", " ".join(k.value for k in members))
    except Exception as e:
        handle_command_error(e, "validate command")
    finish(report, json_output)


@app.command("parastrophe")
def parastrophe_command(
    table: str = typer.Argument(..., help="Table file or fixture name"),
    kind: Optional[OperationKind] = typer.Option(None, "--kind", help="Parastrophe to derive"),
    all_kinds: bool = typer.Option(False, "--all", help="Derive all six and group equal ones"),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Derive parastrophe tables of a quasigroup

    Examples:
      quasisoft parastrophe q6 --kind ldiv   # left division table
      quasisoft parastrophe q6 --all         # all six, with coincidence classes
    """
    if kind is None and not all_kinds:
        typer.echo("Give --kind KIND or --all.", err=True)
        raise typer.Exit(EXIT_USAGE)
    try:
        q = load_quasigroup(table)
        report = Report()
        kinds = list(OperationKind) if all_kinds else [kind]
        for k in kinds:
            assert k is not None
            derived = parastrophe(q, k)
            report.section(f"parastrophe {k.value}").add("glyph", k.glyph).add(
                "op_kind", derived.op_kind.value
            )
            report.tables.append(cayley_block(f"{k.glyph} ({k.value})", derived.table))
        if all_kinds:
            classes = report.section("parastrophe classes")
            for i, members in enumerate(parastrophe_classes(q), start=1):
                classes.add(f"class {i}", " ".join(m.value for m in members))
    except Exception as e:
        handle_command_error(e, "parastrophe command")
    finish(report, json_output)


@app.command("subs")
def subs_command(
    ctx: typer.Context,
    table: str = typer.Argument(..., help="Table file or fixture name"),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Enumerate all subquasigroups, marking the normal ones

    Examples:
      quasisoft subs q6
    """
    try:
        settings = get_settings(ctx)
        q = load_quasigroup(table)
        subs = all_subquasigroups(q, settings.enumeration_bound, settings.scan_threshold)
        report = Report()
        section = report.section("subquasigroups").add("count", len(subs))
        for h in subs:
            normal = is_normal_subquasigroup(q, h) is not None
            section.add(format_subset(q.symbols, h), "normal" if normal else "not normal")
    except Exception as e:
        handle_command_error(e, "subs command")
    finish(report, json_output)


@soft_app.command("check")
def soft_check(
    table: str = typer.Argument(..., help="Table file or fixture name"),
    softset: str = typer.Argument(..., help="Soft-set file or fixture name"),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Classify a soft set as a soft groupoid, quasigroup, loop or group

    Examples:
      quasisoft soft check q6 q6-tower
    """
    try:
        q = load_quasigroup(table)
        sq = classify(q, resolve_soft_set(softset, q.symbols))
        report = Report()
        report.section("classification").add("class", sq.soft_class.label).add(
            "soft quasigroup", sq.is_soft_quasigroup
        )
        values = report.section("parameters")
        for p, (a, value) in zip(sq.parameters, sq.soft.items()):
            flags = f"groupoid={p.groupoid} quasigroup={p.quasigroup} loop={p.loop} group={p.group}"
            values.add(a, f"{format_subset(q.symbols, value)} {flags.lower()}")
            if p.quasigroup:
                continue
            found = closure_witness(q, value)
            assert found is not None
            k, x, y, z = found
            report.fail(
                "soft check",
                "value is not a subquasigroup",
                parameter=a,
                cell=f"{q.symbols[x]} {k.glyph} {q.symbols[y]} = {q.symbols[z]}",
            )
    except Exception as e:
        handle_command_error(e, "soft check command")
    finish(report, json_output)


@soft_app.command("metrics")
def soft_metrics(
    ctx: typer.Context,
    table: str = typer.Argument(..., help="Table file or fixture name"),
    softset: str = typer.Argument(..., help="Soft-set file or fixture name"),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Order, arithmetic mean and geometric mean of a soft quasigroup

    Examples:
      quasisoft soft metrics q6 q6-tower
    """
    try:
        settings = get_settings(ctx)
        q = load_quasigroup(table)
        sq = classify(q, resolve_soft_set(softset, q.symbols))
        m = metrics(sq)
        report = Report()
        section = report.section("metrics")
        section.add("order_raw", m.order_raw)
        section.add("order_distinct_proper", m.order_distinct_proper)
        section.add("am", m.am).add("gm", m.gm)
        section.add("gm_decimal", m.gm.decimal(settings.decimal_places))
        section.add("am_ge_gm", amgm_holds(m))
        section.add("parastrophe_invariant", parastrophe_metric_equality(sq))
    except Exception as e:
        handle_command_error(e, "soft metrics command")
    finish(report, json_output)


@soft_app.command("compare")
def soft_compare(
    ctx: typer.Context,
    table: str = typer.Argument(..., help="Table file or fixture name"),
    left: str = typer.Argument(..., help="First soft-set file or fixture name"),
    right: str = typer.Argument(..., help="Second soft-set file or fixture name"),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Compare two soft sets and combine them

    Examples:
      quasisoft soft compare q8 q8-small q8-large
    """
    try:
        settings = get_settings(ctx)
        q = load_quasigroup(table)
        f = resolve_soft_set(left, q.symbols)
        g = resolve_soft_set(right, q.symbols)
        report = Report()
        order = report.section("order")
        order.add("left <= right", soft_subset(f, g)).add("right <= left", soft_subset(g, f))
        order.add("equal", soft_equal(f, g))
        sf, sg = classify(q, f), classify(q, g)
        if sf.is_soft_quasigroup and sg.is_soft_quasigroup:
            order.add("left soft subquasigroup of right", soft_subquasigroup_of(sf, sg))

        strict = settings.strict_intersections
        for title, combine in (
            ("restricted intersection", lambda: restricted_intersection(f, g, strict=strict)),
            ("extended intersection", lambda: extended_intersection(f, g, strict=strict)),
            ("extended union", lambda: extended_union(f, g)),
        ):
            section = report.section(title)
            try:
                combined = combine()
            except EmptySoftSetError as e:
                if strict:
                    raise
                section.add("empty", True).add("dropped", " ".join(e.dropped) or "-")
                continue
            describe_soft_set(combined, q.symbols, section)
            if combined.dropped:
                section.add("dropped", " ".join(combined.dropped))
    except Exception as e:
        handle_command_error(e, "soft compare command")
    finish(report, json_output)


@app.command("cosets")
def cosets_command(
    table: str = typer.Argument(..., help="Table file or fixture name"),
    softset: str = typer.Argument(..., help="Soft-set file or fixture name"),
    side: Side = typer.Option(Side.LEFT, "--side", help="Translate on the left or the right"),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Coset soft sets of a soft quasigroup and, when normal, its quotient family

    Examples:
      quasisoft cosets z3-medial my-soft.txt --side right
    """
    try:
        q = load_quasigroup(table)
        sq = classify(q, resolve_soft_set(softset, q.symbols))
        family = coset_family(sq, side)
        report = Report()
        for x, member in enumerate(family.members):
            title = f"{side.value} coset {q.symbols[x]}"
            describe_soft_set(member, q.symbols, report.section(title))

        summary = report.section("quotient family")
        try:
            quotients = quotient_family(sq, side)
        except NotNormalError as e:
            summary.add("normal", False).add("parameter", e.parameter or "-")
        else:
            summary.add("normal", True)
            for entry in quotients.entries:
                block = report.section(f"quotient {entry.parameter}")
                block.add("congruence", format_congruence(q.symbols, entry.congruence))
                block.add("order", entry.quotient.n)
                cosets = " ".join(format_subset(q.symbols, c) for c in entry.coset_labels)
                block.add("cosets", cosets)
                block.add("bijective", entry.bijective)
                block.add("commutative", entry.is_commutative)
                block.add("distributive", entry.is_distributive)
                title = f"quotient {entry.parameter}"
                report.tables.append(cayley_block(title, entry.quotient.table))
    except Exception as e:
        handle_command_error(e, "cosets command")
    finish(report, json_output)


@app.command("congruences")
def congruences_command(
    ctx: typer.Context,
    table: str = typer.Argument(..., help="Table file or fixture name"),
    check: Optional[str] = typer.Option(None, "--check", help='Partition like "({1 2})({3})"'),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Enumerate the normal congruences, or decide one given partition

    Examples:
      quasisoft congruences z9-medial
      quasisoft congruences z3-medial --check "({0 1})({2})"
    """
    try:
        settings = get_settings(ctx)
        q = load_quasigroup(table)
        report = Report()
        if check is not None:
            theta = parse_congruence(q.symbols, check)
            normal = is_normal_congruence(q, theta)
            label = format_congruence(q.symbols, theta)
            report.section("check").add("partition", label).add("normal", normal)
            if not normal:
                report.fail("congruence", "partition is not a normal congruence", partition=label)
        else:
            found = all_normal_congruences(q, settings.enumeration_bound)
            section = report.section("normal congruences").add("count", len(found))
            for i, theta in enumerate(found, start=1):
                section.add(f"theta {i}", format_congruence(q.symbols, theta))
    except Exception as e:
        handle_command_error(e, "congruences command")
    finish(report, json_output)


@app.command("quotient")
def quotient_command(
    table: str = typer.Argument(..., help="Table file or fixture name"),
    subset: str = typer.Option(..., "--subset", help='Subquasigroup symbols, e.g. "00 10 20"'),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Quotient of a quasigroup by a normal subquasigroup

    Examples:
      quasisoft quotient z9-medial --subset "00 10 20"
    """
    try:
        q = load_quasigroup(table)
        h = parse_subset(q.symbols, subset)
        if h.is_empty:
            raise EmptySubsetError()
        report = Report()
        label = format_subset(q.symbols, h)
        section = report.section("subset").add("subset", label)
        if not is_subquasigroup(q, h):
            found = closure_witness(q, h)
            assert found is not None
            k, x, y, z = found
            section.add("subquasigroup", False)
            report.fail(
                "quotient",
                "subset is not a subquasigroup",
                subset=label,
                cell=f"{q.symbols[x]} {k.glyph} {q.symbols[y]} = {q.symbols[z]}",
            )
        else:
            section.add("subquasigroup", True)
            theta = is_normal_subquasigroup(q, h)
            if theta is None:
                generated = generated_normal_congruence(q, [(h.least, m) for m in h])
                section.add("normal", False)
                report.fail(
                    "quotient",
                    "subset is not a block of the congruence it generates",
                    subset=label,
                    generated=format_congruence(q.symbols, generated),
                )
            else:
                q_theta = quotient(q, theta)
                props = properties(q_theta)
                section.add("normal", True)
                section.add("congruence", format_congruence(q.symbols, theta))
                add_properties(report.section("quotient"), q_theta, props)
                report.tables.append(cayley_block("quotient", q_theta.table))
    except Exception as e:
        handle_command_error(e, "quotient command")
    finish(report, json_output)


@app.command("iso")
def iso_command(
    ctx: typer.Context,
    first: str = typer.Argument(..., help="First table file or fixture name"),
    second: str = typer.Argument(..., help="Second table file or fixture name"),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Search for an isomorphism between two quasigroups

    Examples:
      quasisoft iso z4 z2xz2
    """
    try:
        settings = get_settings(ctx)
        q1, q2 = load_quasigroup(first), load_quasigroup(second)
        witness = are_isomorphic(q1, q2, settings.iso_bound)
        report = Report()
        section = report.section("isomorphism").add("isomorphic", witness is not None)
        if witness is None:
            report.fail("isomorphism", "no isomorphism exists", first=q1.n, second=q2.n)
        else:
            for x in range(q1.n):
                section.add(q1.symbols[x], q2.symbols[witness(x)])
    except Exception as e:
        handle_command_error(e, "iso command")
    finish(report, json_output)


@app.command("suite")
def suite_command(
    ctx: typer.Context,
    table: str = typer.Argument(..., help="Table file or fixture name"),
    softset: Optional[str] = typer.Argument(None, help="Optional soft-set file or fixture name"),
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    Run every theorem battery that applies to the inputs

    Examples:
      quasisoft suite z9-medial
      quasisoft suite q6 q6-tower --json
    """
    try:
        q = load_quasigroup(table)
        soft = resolve_soft_set(softset, q.symbols) if softset is not None else None
        report = run_suite(q, soft, get_settings(ctx))
    except Exception as e:
        handle_command_error(e, "suite command")
    finish(report, json_output)


@app.command("fixtures")
def fixtures_command(
    json_output: bool = typer.Option(False, "--json", help="Output in JSON format"),
):
    """
    List the built-in tables and soft sets

    Examples:
      quasisoft fixtures
    """
    try:
        report = Report()
        tables = report.section("tables")
        softsets = report.section("soft sets")
        for fixture in list_fixtures():
            if fixture.kind == "softset":
                softsets.add(fixture.name, f"over {fixture.table_name}: {fixture.description}")
            else:
                tables.add(fixture.name, fixture.description)
    except Exception as e:
        handle_command_error(e, "fixtures command")
    finish(report, json_output)


if __name__ == "__main__":
    app()
