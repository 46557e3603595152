"""
Command-line interface for gentrig.

Usage:
    gentrig eval sin_p --p 3 --x 0.7            # value and error estimate
    gentrig table sinh_p --p 3 --x-lo 0 --x-hi 1 --n 5
    gentrig verify --out report.json            # every registry case
    gentrig verify --cases wilker_hyp --grid-n 100
    gentrig conjecture conj_cusa_sharp --p 3
    gentrig plotdata margin --case chain_2_4_4 --p 3 --n 100 --out chain.csv

Exit codes: 0 success, 1 a theorem case failed (or a conjecture
counterexample under --strict-conjectures), 2 configuration, domain or usage
errors.
"""

import logging
import sys

import click
import numpy as np

from . import __version__
from .config import AppConfig, ConfigError, load_config
from .errors import GentrigError, InvalidArgument
from .functions import FUNCTIONS, evaluate
from .inequalities import CASES, CONJECTURE_IDS, XDomain, get_case, registry
from .logging_config import setup_logging
from .ptrig import PParam, pi_p
from .report import report_document, write_csv, write_report
from .scans import GridSpec, ScanReport, explore_conjecture, probe_best_constant, run_case, x_grid

logger = logging.getLogger(__name__)

__all__ = [
    "cli",
]

T_PARAM_FUNCTIONS = ("cos", "sin", "sinh", "cosh")


def _fail(error: Exception) -> None:
    click.echo(f"Error: {type(error).__name__}: {error}", err=True)
    sys.exit(2)


def _app_config() -> AppConfig:
    return click.get_current_context().find_root().obj


def _grid(grid_n: int | None, p_values: tuple[float, ...] = ()) -> GridSpec:
    return GridSpec(p_values=p_values) if grid_n is None else GridSpec(p_values=p_values, x_count=grid_n)


def _split_ids(values: tuple[str, ...]) -> list[str]:
    ids = []
    for value in values:
        ids.extend(part.strip() for part in value.split(",") if part.strip())
    return ids


@click.group()
@click.version_option(version=__version__, prog_name="gentrig")
@click.pass_context
def cli(ctx: click.Context):
    """
    Generalized p-trigonometric/p-hyperbolic functions and inequality scans.

    Examples:

        gentrig eval pi_p --p 4

        gentrig verify --cases mitrinovic_adamovic,lazarevic --grid-n 200

        gentrig plotdata tparam --function cosh --p 2 --x 1
    """
    if ctx.obj is not None:
        return
    try:
        config = load_config()
    except ConfigError as e:
        click.echo(f"Configuration error:\n{e}", err=True)
        sys.exit(2)
    setup_logging(
        app_level=config.log_level_app,
        dep_level=config.log_level_deps,
        log_to_console=config.log_to_console,
        log_file_path=config.log_file_path,
    )
    ctx.obj = config


# ============================================================================
# Point evaluation and tables
# ============================================================================

@cli.command("eval")
@click.argument("function", type=click.Choice(list(FUNCTIONS)))
@click.option("--p", "p", type=float, required=True, help="Exponent p > 1")
@click.option("--x", "x", type=float, default=None, help="Argument (not used by pi_p)")
def eval_command(function: str, p: float, x: float | None):
    """
    Print FUNCTION(x) and its error estimate with 17 significant digits.

    Examples:

        gentrig eval sin_p --p 2 --x 0.5235987755982988

        gentrig eval arctanh_p --p 3 --x 0.5
    """
    config = _app_config()
    try:
        result = evaluate(function, p, x, config.eval)
    except GentrigError as e:
        _fail(e)
    click.echo(f"{result.value:.17g} {result.err_est:.17g}")


@cli.command()
@click.argument("function", type=click.Choice(list(FUNCTIONS)))
@click.option("--p", "p", type=float, required=True, help="Exponent p > 1")
@click.option("--x-lo", type=float, required=True, help="First x")
@click.option("--x-hi", type=float, required=True, help="Last x")
@click.option("--n", "n", type=int, default=11, show_default=True, help="Number of rows")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV file (default: stdout)")
def table(function: str, p: float, x_lo: float, x_hi: float, n: int, out: str | None):
    """
    Tabulate FUNCTION on n equally spaced points as CSV x,value,err_est.

    Examples:

        gentrig table sin_p --p 2 --x-lo 0 --x-hi 3.141592653589793 --n 5
    """
    config = _app_config()
    try:
        if n < 1:
            raise InvalidArgument(f"--n must be >= 1, got {n}")
        rows = []
        for x in np.linspace(x_lo, x_hi, n):
            result = evaluate(function, p, float(x), config.eval)
            rows.append((float(x), result.value, result.err_est))
    except GentrigError as e:
        _fail(e)
    text = write_csv(("x", "value", "err_est"), rows, out)
    if out is None:
        click.echo(text, nl=False)


# ============================================================================
# Verification
# ============================================================================

def _select_cases(case_ids: list[str]) -> list:
    if not case_ids:
        return registry()
    return [get_case(case_id) for case_id in case_ids]


def _case_grid(case, grid: GridSpec, p_filter: tuple[float, ...]) -> GridSpec | None:
    """The grid restricted to exponents inside the case's domain; None if none remain."""
    if not p_filter:
        return grid
    inside = tuple(p for p in p_filter if case.p_domain.contains(p))
    if not inside:
        return None
    return GridSpec(inside, grid.x_count, grid.x_spacing, grid.x_margin_frac)


def _echo_report(report: ScanReport) -> None:
    click.echo(report.summary_line())
    if report.conjecture and report.violations:
        first = report.violations[0]
        click.echo(
            f"  COUNTEREXAMPLE {report.case_id}: {first.label} = {first.margin!r} at p={first.p!r}, x={first.x!r}"
        )
    for summary in report.monotone:
        if report.conjecture and summary.violations:
            x, diff = summary.violations[0]
            click.echo(f"  COUNTEREXAMPLE {report.case_id}: {summary.label} not {summary.direction} at x={x!r} (Δ={diff!r})")


@cli.command()
@click.option("--cases", "case_ids", multiple=True, help="Case ids (repeat or comma-separate); default all")
@click.option("--grid-n", type=int, default=None, help="x-points per exponent (default 400)")
@click.option("--p", "p_values", type=float, multiple=True, help="Exponents to scan (default per case)")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="report_v1 JSON file")
@click.option("--workers", type=int, default=None, help="Scan threads (default GENTRIG_WORKERS)")
@click.option("--best-constants/--no-best-constants", default=True, help="Also probe sharp exponents")
@click.option("--records", is_flag=True, help="Include per-point records in the report")
@click.option("--strict-conjectures", is_flag=True, help="Exit 1 when a conjecture shows a counterexample")
def verify(
    case_ids: tuple[str, ...],
    grid_n: int | None,
    p_values: tuple[float, ...],
    out: str | None,
    workers: int | None,
    best_constants: bool,
    records: bool,
    strict_conjectures: bool,
):
    """
    Scan registry cases and write one report.

    Prints one summary line per case. Exits 1 if any theorem case fails;
    conjecture cases only affect the exit code with --strict-conjectures, and
    best-constant probes never do.

    Examples:

        gentrig verify

        gentrig verify --cases wilker_hyp --out wilker.json
    """
    config = _app_config()
    workers = workers or config.workers
    reports = []
    try:
        grid = _grid(grid_n)
        for case in _select_cases(_split_ids(case_ids)):
            case_grid = _case_grid(case, grid, p_values)
            if case_grid is None:
                logger.info(f"Skipping {case.id}: no requested p inside {case.p_domain}")
                click.echo(f"{case.id}: skipped (no requested p inside {case.p_domain})")
                continue
            report = run_case(case, case_grid, config.eval, workers)
            _echo_report(report)
            reports.append(report)
            if best_constants and case.best_constant is not None:
                probe = probe_best_constant(case, case_grid, config.eval, workers=workers)
                click.echo(probe.summary_line())
                reports.append(probe)
    except GentrigError as e:
        _fail(e)

    if out:
        write_report(report_document(reports, config.eval, workers=workers, include_records=records), out)

    failed = [r.case_id for r in reports if not r.conjecture and not r.best_constant_probe and not r.passed]
    counterexamples = [r.case_id for r in reports if r.conjecture and not r.passed]
    theorem_count = sum(1 for r in reports if not r.conjecture and not r.best_constant_probe)
    click.echo(
        f"{theorem_count - len(failed)}/{theorem_count} theorem cases pass; "
        f"conjecture counterexamples: {len(counterexamples)}"
    )
    if failed or (strict_conjectures and counterexamples):
        sys.exit(1)


@cli.command()
@click.argument("case_id")
@click.option("--grid-n", type=int, default=None, help="x-points per exponent (default 400)")
@click.option("--p", "p_values", type=float, multiple=True, help="Exponents to scan (default per case)")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="report_v1 JSON file")
@click.option("--workers", type=int, default=None, help="Scan threads (default GENTRIG_WORKERS)")
@click.option("--records", is_flag=True, help="Include per-point records in the report")
@click.option("--strict-conjectures", is_flag=True, help="Exit 1 when a counterexample is found")
def conjecture(
    case_id: str,
    grid_n: int | None,
    p_values: tuple[float, ...],
    out: str | None,
    workers: int | None,
    records: bool,
    strict_conjectures: bool,
):
    """
    Explore CASE_ID (conj_log_ratio or conj_cusa_sharp) and report evidence.

    The report never claims a proof. A counterexample is printed prominently
    and only changes the exit code with --strict-conjectures.
    """
    config = _app_config()
    workers = workers or config.workers
    try:
        report = explore_conjecture(case_id, _grid(grid_n, p_values), config.eval, workers)
    except GentrigError as e:
        _fail(e)
    _echo_report(report)
    click.echo("evidence only: no proof is claimed")
    if out:
        write_report(report_document([report], config.eval, workers=workers, include_records=records), out)
    if strict_conjectures and not report.passed:
        sys.exit(1)


# ============================================================================
# Plot data
# ============================================================================

def _case_columns(case) -> tuple[XDomain, list]:
    """x-domain and named curves to tabulate: curves, else margins, else monotone functions."""
    if case.curves:
        return case.x_domain, [(c.name, c.evaluate) for c in case.curves]
    if case.margins:
        return case.x_domain, [(m.name, m.evaluate) for m in case.margins]
    if case.monotone:
        return case.monotone[0].interval, [(m.name, m.function) for m in case.monotone]
    raise InvalidArgument(f"{case.id} has no x-curves; use 'plotdata tparam'")


@cli.command()
@click.argument("kind", type=click.Choice(["function", "margin", "tparam"]))
@click.option("--function", "function", default=None, help="Function name (function: registry name; tparam: cos|sin|sinh|cosh)")
@click.option("--case", "case_id", default=None, help="Registry case id (margin)")
@click.option("--p", "p", type=float, required=True, help="Exponent p > 1")
@click.option("--x", "x", type=float, default=None, help="Fixed x (tparam)")
@click.option("--x-lo", type=float, default=0.0, show_default=True, help="First x (function)")
@click.option("--x-hi", type=float, default=None, help="Last x (function; default π_p/2)")
@click.option("--n", "n", type=int, default=100, show_default=True, help="Number of rows")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV file (default: stdout)")
def plotdata(
    kind: str,
    function: str | None,
    case_id: str | None,
    p: float,
    x: float | None,
    x_lo: float,
    x_hi: float | None,
    n: int,
    out: str | None,
):
    """
    Emit CSV data behind function, margin and t-parametric plots.

    Examples:

        gentrig plotdata function --function sin_p --p 2

        gentrig plotdata margin --case chain_2_4_4 --p 3 --n 100

        gentrig plotdata tparam --function cosh --p 2 --x 1
    """
    config = _app_config()
    cfg = config.eval
    try:
        if n < 2:
            raise InvalidArgument(f"--n must be >= 2, got {n}")
        pp = PParam(p)

        if kind == "function":
            if function not in FUNCTIONS:
                raise InvalidArgument(f"--function must be one of {', '.join(FUNCTIONS)}, got {function!r}")
            hi = pi_p(pp, cfg).half_pi_p if x_hi is None else x_hi
            xs = [float(v) for v in np.linspace(x_lo, hi, n)]
            header = ("x", function)
            rows = [(v, evaluate(function, pp, v, cfg).value) for v in xs]

        elif kind == "margin":
            if case_id is None:
                raise InvalidArgument("plotdata margin needs --case")
            case = get_case(case_id)
            if not case.p_domain.contains(p):
                raise InvalidArgument(f"p={p!r} outside {case.id}'s p-domain {case.p_domain}")
            domain, columns = _case_columns(case)
            xs = x_grid(domain, pp, GridSpec(x_count=n), cfg)
            header = ("x", *(name for name, _ in columns))
            rows = [(v, *(fn(pp, v, cfg) for _, fn in columns)) for v in xs]

        else:
            if function not in T_PARAM_FUNCTIONS:
                raise InvalidArgument(f"--function must be one of {', '.join(T_PARAM_FUNCTIONS)}, got {function!r}")
            if x is None or not x > 0.0:
                raise InvalidArgument(f"plotdata tparam needs --x > 0, got {x!r}")
            claim = CASES[f"t_param_{function}"].shapes[0]
            lo, hi = claim.t_interval(pp, x, cfg)
            ts = [float(t) for t in np.linspace(lo, hi, n)]
            values = [claim.function(pp, x, t, cfg) for t in ts]
            header = ("t", claim.name, f"log {claim.name}")
            rows = [(t, g, float(np.log(g))) for t, g in zip(ts, values)]
    except (GentrigError, ValueError, ArithmeticError) as e:
        _fail(e)

    text = write_csv(header, rows, out)
    if out is None:
        click.echo(text, nl=False)


@cli.command("cases")
def list_cases():
    """List registry ids with kind and p-domain."""
    for case in registry():
        marker = " (conjecture)" if case.id in CONJECTURE_IDS else ""
        click.echo(f"{case.id}\t{case.kind}\tp in {case.p_domain}\t{case.description}{marker}")


if __name__ == "__main__":
    cli()
