"""Command-line interface for braidpy."""
import json
import logging
import re
import sys
from typing import List

import click
from colorama import Fore, init

from braidpy import __version__
from braidpy.core.report import CheckStatus, SuiteReport
from braidpy.core.suites import (
    DEFAULT_LAMBDA_SAMPLES,
    DEFAULT_Q_SAMPLES,
    DEFAULT_RHO_SAMPLES,
    OUTPUT_FORMATS,
    SUITE_IDS,
    SuiteConfig,
    derived_constants,
    run,
)
from braidpy.utils.numrep import Window, WindowError, nine_range_rank
from braidpy.utils.oracles import ORACLE_DIR_ENV

# Initialize colorama for cross-platform colored output
init(autoreset=True)

_ANSI = re.compile(r"\x1b\[[0-9;]*m")

STATUS_COLORS = {
    CheckStatus.PASS: Fore.GREEN,
    CheckStatus.FAIL: Fore.RED,
    CheckStatus.SKIPPED: Fore.YELLOW,
}


class ComplexParam(click.ParamType):
    """A complex number written like 0.3+0.4i or 0.3+0.4j."""

    name = "complex"

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        text = str(value).strip().replace(" ", "")
        if text.endswith("i"):
            text = text[:-1] + "j"
        try:
            return complex(text)
        except ValueError:
            self.fail(f"{value!r} is not a complex number", param, ctx)


COMPLEX = ComplexParam()


def _format_q(q0: complex) -> str:
    return f"{q0.real:g}{q0.imag:+g}i" if q0.imag else f"{q0.real:g}"


def _emit(text: str, output, plain: bool = False):
    """Print the report, or save it without colour codes."""
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text if plain else _ANSI.sub("", text))
            f.write("\n")
        click.echo(f"{Fore.GREEN}Report saved to {output}", err=plain)
    else:
        click.echo(text)


def render_json(reports: List[SuiteReport]) -> str:
    """JSON lines: one record per line, then one summary line."""
    lines = [json.dumps(r.to_dict(), sort_keys=True) for report in reports for r in report.records]
    summary = {
        "suites": [report.summary() for report in reports],
        "total": sum(len(report.records) for report in reports),
        "passed": sum(report.passed for report in reports),
        "failed": sum(report.failed for report in reports),
        "skipped": sum(report.skipped for report in reports),
    }
    lines.append(json.dumps({"summary": summary}, sort_keys=True))
    return "\n".join(lines)


def render_text(reports: List[SuiteReport]) -> str:
    """Coloured report: one line per record, witnesses of failures indented below."""
    lines = []
    for report in reports:
        lines.append(f"\n{Fore.CYAN}{'=' * 80}")
        lines.append(f"{Fore.CYAN}Suite {report.name}")
        lines.append(f"{Fore.CYAN}{'=' * 80}")
        for record in report.records:
            color = STATUS_COLORS[record.status]
            timing = f" ({record.wall_time:.3f}s)" if record.wall_time is not None else ""
            lines.append(f"  {color}{record.status.value.upper():8}{Fore.RESET} {record.check_id} [{record.source}]{timing}")
            if record.status is not CheckStatus.PASS and record.witness:
                lines.append(f"           {record.witness}")
        color = Fore.GREEN if report.ok else Fore.RED
        lines.append(
            f"{color}{report.name}: {report.passed} passed, {report.failed} failed, {report.skipped} skipped"
        )
    passed = sum(r.passed for r in reports)
    failed = sum(r.failed for r in reports)
    skipped = sum(r.skipped for r in reports)
    color = Fore.GREEN if failed == 0 else Fore.RED
    lines.append(f"\n{color}Total: {passed} passed, {failed} failed, {skipped} skipped")
    return "\n".join(lines)


@click.group()
@click.version_option(version=__version__)
def cli():
    """braidpy - exact verification of braided SU_q(2) and Podles spheres.

    Runs symbolic identity checks and numeric cross-checks from the command line.
    """
    pass


@cli.command()
@click.argument("suites", nargs=-1, required=True)
@click.option("--max-size", default=3, show_default=True, help="Bound on |n|+k+l for exhaustive checks")
@click.option("--q", "q_samples", type=COMPLEX, multiple=True, help="Sample value of q (repeatable)")
@click.option("--lambda", "lambda_samples", type=float, multiple=True, help="Sample value of lambda (repeatable)")
@click.option("--rho", "rho_samples", type=float, multiple=True, help="Sample value of rho (repeatable)")
@click.option("--levels", default=10, show_default=True, help="Highest level n of the numeric window")
@click.option("--window", default=8, show_default=True, help="Largest |k| of the numeric window")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default="text", show_default=True)
@click.option("--oracle-dir", type=click.Path(file_okay=False), envvar=ORACLE_DIR_ENV, help="Directory with oracle tables")
@click.option("--output", "-o", type=click.Path(), help="Save report to file")
@click.option("--jobs", default=1, show_default=True, help="Worker threads per suite")
@click.option("--timings", is_flag=True, help="Record wall time of each check")
@click.option("--verbose", "-v", is_flag=True, help="Log suite progress to stderr")
def verify(
    suites, max_size, q_samples, lambda_samples, rho_samples, levels, window, output_format, oracle_dir, output, jobs, timings, verbose
):
    """Run verification suites.

    SUITES are suite ids or "all". Exits with 1 if any check fails.
    """
    if verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")
    config = SuiteConfig(
        suites=list(suites),
        max_size=max_size,
        q_samples=list(q_samples) or list(DEFAULT_Q_SAMPLES),
        lambda_samples=list(lambda_samples) or list(DEFAULT_LAMBDA_SAMPLES),
        rho_samples=list(rho_samples) or list(DEFAULT_RHO_SAMPLES),
        levels=levels,
        window=window,
        output_format=output_format,
        oracle_dir=oracle_dir,
        jobs=jobs,
        timings=timings,
    )
    try:
        config.validate()
        reports = run(config)
    except ValueError as e:
        # ConfigError or an unreadable oracle table
        raise click.UsageError(str(e))

    if output_format == "json":
        _emit(render_json(reports), output, plain=True)
    else:
        _emit(render_text(reports), output)

    if any(report.has_failures() for report in reports):
        sys.exit(1)


@cli.command("check-rank")
@click.option("--q", "q_samples", type=COMPLEX, multiple=True, help="Sample value of q (repeatable)")
@click.option("--levels", default=10, show_default=True, help="Highest level n of the numeric window")
@click.option("--window", default=8, show_default=True, help="Largest |k| of the numeric window")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default="text", show_default=True)
def check_rank(q_samples, levels, window, output_format):
    """Rank of the nine vectors pi(v_ij) e_(2,0) on a truncated window."""
    results = []
    for q0 in q_samples or DEFAULT_Q_SAMPLES:
        try:
            rank, singular = nine_range_rank(Window(levels, window, q0))
        except WindowError as e:
            raise click.UsageError(str(e))
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint="--q")
        results.append({"q": _format_q(q0), "rank": rank, "singular_values": [round(s, 12) for s in singular]})

    if output_format == "json":
        for result in results:
            click.echo(json.dumps(result, sort_keys=True))
    else:
        for result in results:
            color = Fore.GREEN if result["rank"] == 9 else Fore.RED
            click.echo(f"{color}q={result['q']}: rank {result['rank']}")
            values = ", ".join(f"{s:.6e}" for s in result["singular_values"])
            click.echo(f"  singular values: {values}")

    if any(result["rank"] != 9 for result in results):
        sys.exit(1)


@cli.command()
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default="text", show_default=True)
def report(output_format):
    """Print derived constants, conventions and recorded discrepancies."""
    constants = derived_constants()
    if output_format == "json":
        click.echo(json.dumps(constants, sort_keys=True, indent=2))
        return

    click.echo(f"\n{Fore.CYAN}{'=' * 80}")
    click.echo(f"{Fore.CYAN}Derived constants")
    click.echo(f"{Fore.CYAN}{'=' * 80}\n")
    click.echo(f"{Fore.YELLOW}Quotient sphere:")
    click.echo(f"  rho_q:                  {constants['quotient_rho']}")
    click.echo(f"  lambda_q:               {constants['quotient_lambda']}")
    click.echo(f"{Fore.YELLOW}Rescaled sphere:")
    click.echo(f"  rho':                   {constants['rho_prime']}")
    click.echo(f"  sqrt(vs)*lambda':       {constants['sqrt_vs_lambda_prime']}")
    click.echo(f"{Fore.YELLOW}Conventions:")
    click.echo(f"  exchange:  {constants['exchange_orientation']}")
    click.echo(f"  degrees:   {constants['degree_convention']}")
    click.echo(f"{Fore.YELLOW}Discrepancies with the printed forms:")
    for item in constants["discrepancies"]:
        click.echo(f"  - {item}")
    click.echo(f"\n{Fore.CYAN}Suites: {', '.join(SUITE_IDS)}, all")


if __name__ == "__main__":
    cli()
