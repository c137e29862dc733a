"""Command line: ``graphvol <command>``.

Reports go to stdout, one record per line, numbers with 15 significant
digits. Domain failures print a single ``ERROR <code>: <message>`` line on
stderr and exit 1; usage errors print ``ERROR usage: <message>`` and exit 2.
"""

import sys
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import click
from pydantic import BaseModel, Field

from graphvol.bounds import doubling_lower_bound, upper_bound
from graphvol.core.config import MIN_TOLERANCE, settings
from graphvol.core.errors import GraphVolError
from graphvol.core.formatting import fmt
from graphvol.core.logging import get_logger, setup_logging
from graphvol.diagram import GraphDiagram, check, parse
from graphvol.freegroup import claim_suite
from graphvol.geometry import constant_checks, theta_report
from graphvol.octdecomp import CrossingFreeCycleError, decompose, export, validate

logger = get_logger(__name__)


class CliConfig(BaseModel):
    """Options shared by every command."""

    tol: float | None = Field(default=None, ge=MIN_TOLERANCE)
    quiet: bool = False


class GraphVolGroup(click.Group):
    """Turns failures into one ``ERROR`` line: exit 1 for domain errors, 2 for usage."""

    def main(
        self,
        args: Sequence[str] | None = None,
        prog_name: str | None = None,
        complete_var: str | None = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        if not standalone_mode:
            return super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        try:
            status = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.exceptions.NoArgsIsHelpError as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.UsageError as exc:
            click.echo(f"ERROR usage: {exc.format_message()}", err=True)
            sys.exit(exc.exit_code)
        except click.ClickException as exc:
            click.echo(f"ERROR cli: {exc.format_message()}", err=True)
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("ERROR aborted: interrupted", err=True)
            sys.exit(1)
        sys.exit(status if isinstance(status, int) else 0)

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except GraphVolError as exc:
            click.echo(f"ERROR {exc.code}: {exc.message}", err=True)
            ctx.exit(1)


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _load(path: Path) -> GraphDiagram:
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise GraphVolError(f"{path}: no such file", code="file-not-found", original_error=exc) from exc
    except OSError as exc:
        raise GraphVolError(f"{path}: {exc.strerror}", code="file-unreadable", original_error=exc) from exc
    return parse(text)


def _parse_lower(values: tuple[str, str] | None) -> dict[str, float] | None:
    if not values:
        return None
    parsed: dict[str, float] = {}
    for item in values:
        key, sep, raw = item.partition("=")
        if not sep or key not in ("vol_double_cut", "vol_thickened") or key in parsed:
            raise click.BadParameter(
                f"expected vol_double_cut=<v> vol_thickened=<v>, got {item!r}", param_hint="--lower"
            )
        try:
            parsed[key] = float(raw)
        except ValueError:
            raise click.BadParameter(f"{raw!r} is not a number", param_hint="--lower") from None
    return parsed


DiagramFile = click.Path(dir_okay=False, path_type=Path)

# Commands that evaluate the Lobachevsky function.
TOLERANCE_COMMANDS = frozenset({"constants"})


@contextmanager
def _lobachevsky_tol(tol: float) -> Iterator[None]:
    previous = settings.lobachevsky_tol
    settings.lobachevsky_tol = tol
    try:
        yield
    finally:
        settings.lobachevsky_tol = previous


@click.group(cls=GraphVolGroup)
@click.option(
    "--tol",
    type=click.FloatRange(min=MIN_TOLERANCE),
    default=None,
    help="Absolute tolerance for Lobachevsky evaluation (>= 1e-14).",
)
@click.option("--quiet", is_flag=True, help="Omit provenance and per-component detail; log errors only.")
@click.version_option(package_name="graphvol")
@click.pass_context
def cli(ctx: click.Context, tol: float | None, quiet: bool) -> None:
    """Hyperbolic volume bounds for spatial graphs."""
    setup_logging("ERROR" if quiet else None)
    ctx.obj = CliConfig(tol=tol, quiet=quiet)
    if tol is not None:
        ctx.with_resource(_lobachevsky_tol(tol))
        if ctx.invoked_subcommand not in TOLERANCE_COMMANDS:
            logger.warning("--tol has no effect on this command", command=ctx.invoked_subcommand, tol=tol)


@cli.command("check")
@click.argument("path", type=DiagramFile)
@click.pass_obj
def check_command(config: CliConfig, path: Path) -> None:
    """Validate a diagram and look for crossing-free cycles."""
    report = check(_load(path))
    click.echo(
        f"DIAGRAM crossings={report.crossing_count} vertices={report.vertex_count} "
        f"edges={report.edge_count} components={len(report.components)}"
    )
    if not config.quiet:
        for component in report.components:
            kind = "link" if component.link else "graph"
            vertices = ",".join(component.vertices) or "-"
            click.echo(f"COMPONENT {component.label} kind={kind} vertices={vertices} edges={','.join(component.edges)}")
    for obstruction in report.obstructions:
        click.echo(f"OBSTRUCTION {obstruction.kind} edges={','.join(obstruction.edges)}")
    if report.obstructions:
        raise CrossingFreeCycleError(tuple(report.obstructions[0].edges))


@cli.command("bound")
@click.argument("path", type=DiagramFile)
@click.option(
    "--lower",
    nargs=2,
    type=str,
    default=None,
    metavar="vol_double_cut=<v> vol_thickened=<v>",
    help="Also report the cut-and-double lower bound from externally computed volumes.",
)
@click.pass_obj
def bound_command(config: CliConfig, path: Path, lower: tuple[str, str] | None) -> None:
    """Upper volume bound from the diagram's crossing count."""
    volumes = _parse_lower(lower)
    report = upper_bound(_load(path))
    line = f"BOUND {report.kind} {fmt(report.value)} crossings={report.crossings} constant={report.constant}"
    for warning in report.warnings:
        line += f" WARN {warning}"
    click.echo(line)
    if volumes is not None:
        low = doubling_lower_bound(volumes["vol_double_cut"], volumes["vol_thickened"])
        click.echo(
            f"BOUND {low.kind} {fmt(low.value)} vol_double_cut={fmt(volumes['vol_double_cut'])} "
            f"vol_thickened={fmt(volumes['vol_thickened'])}"
        )


@cli.command("decompose")
@click.argument("path", type=DiagramFile)
@click.pass_obj
def decompose_command(config: CliConfig, path: Path) -> None:
    """Print the octahedral decomposition of a diagram exterior."""
    diagram = _load(path)
    complex_ = decompose(diagram)
    report = validate(complex_, diagram)
    if not report.passed:
        raise GraphVolError(
            "; ".join(f"{f.code}: {f.message}" for f in report.findings),
            code="decomposition-invalid",
        )
    click.echo(export(complex_), nl=False)


@cli.command("constants")
@click.pass_obj
def constants_command(config: CliConfig) -> None:
    """Recompute the volume constants and their cross-checks."""
    results = constant_checks(config.tol)
    for result in results:
        line = f"CONST {result.name} {fmt(result.value)} {_status(result.passed)}"
        if not config.quiet:
            line += f' provenance="{result.provenance}"'
        click.echo(line)
    failed = [r.name for r in results if not r.passed]
    if failed:
        raise GraphVolError(f"cross-checks failed for {', '.join(failed)}", code="constant-check-failed")


@cli.command("verify-theta")
@click.pass_obj
def verify_theta_command(config: CliConfig) -> None:
    """Reproduce the cuboctahedron dihedral angle from ball-model coordinates."""
    report = theta_report()
    click.echo(
        f"THETA computed={fmt(report.angle)} expected={fmt(report.expected)} "
        f"diff={fmt(report.difference)} {_status(report.passed)}"
    )
    click.echo(
        f"DIST u1u2 computed={fmt(report.u1u2_distance)} expected={fmt(report.expected_u1u2_distance)} "
        f"{_status(report.passed)}"
    )
    if not report.passed:
        raise GraphVolError("computed angle or distance is off", code="theta-mismatch")


@cli.command("verify-claims")
@click.pass_obj
def verify_claims_command(config: CliConfig) -> None:
    """Check the surface-group injectivity and non-conjugacy claims."""
    report = claim_suite()
    for claim in report.claims:
        click.echo(f"CLAIM {claim.claim_id} {_status(claim.passed)} rank={claim.rank}")
    for conj in report.conjugacy:
        a, b = conj.cyclic_lengths
        click.echo(f"CONJ {conj.check_id} {_status(conj.passed)} lengths={a},{b}")
    for sub in report.substitutions:
        click.echo(f"SUBST {sub.check_id} {_status(sub.passed)}")
    if not report.passed:
        raise GraphVolError("one or more free-group checks failed", code="claim-failed")


if __name__ == "__main__":
    cli()
