"""
Grid scans over the inequality registry.

A scan evaluates margins, monotone and range claims, endpoint limits and
t-shape claims of one case on a grid of (p, x) points and folds the results
into a ScanReport. Points are evaluated independently (optionally on a thread
pool); the report is always assembled in grid order.
"""

import functools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal

import numpy as np

from .config import DEFAULT_EVAL, EvalConfig
from .errors import EvaluationError, GentrigError, InvalidArgument, NonPositiveValue, UnknownCase
from .inequalities import (
    CONJECTURE_IDS,
    LOG_GRID_START,
    Direction,
    InequalityCase,
    LimitClaim,
    Shape,
    XDomain,
    get_case,
)
from .ptrig import PParam

logger = logging.getLogger(__name__)

# |margin| at or below this is numerically indistinguishable from equality
STRICTNESS_TOL = 1e-12

# Differences within ±NOISE_TOL count as flat in sign tests
NOISE_TOL = 1e-10

# x-probes for limits at x -> 0 (and distances δ·X from a finite right end)
LIMIT_PROBES = (1e-2, 1e-3, 1e-4)

# x-probes for limits at +∞
INFINITY_PROBES = (10.0, 20.0, 40.0)

# Gap allowed at the last x -> 0 probe when the claim gives no tolerance
DEFAULT_LIMIT_TOL = 1e-3

# Points on each t-grid of a shape claim
SHAPE_T_COUNT = 64

# Share of second differences that must be strictly of the claimed sign
SHAPE_STRICT_SHARE = 0.9

# Relative move of the exponent in best-constant probes
BEST_CONSTANT_SHIFT = 1e-2

# A record's err_est is its change when both tolerances are loosened by this factor
ERR_EST_LOOSEN = 10.0

Status = Literal["ok", "violation", "unresolved"]


# ============================================================================
# Grid and report types
# ============================================================================

@dataclass(frozen=True)
class GridSpec:
    """
    Scan grid: exponents, x-count, spacing and end exclusion.

    An empty p_values tuple means "the case's default exponents"; x_spacing
    None means "the spacing the case's domain declares".
    """

    p_values: tuple[float, ...] = ()
    x_count: int = 400
    x_spacing: Literal["linear", "log"] | None = None
    x_margin_frac: float = 1e-3

    def __post_init__(self):
        errors = []
        for p in self.p_values:
            if not (isinstance(p, (int, float)) and math.isfinite(p) and p > 1.0):
                errors.append(f"p_values must be finite and > 1, got {p!r}")
        if not isinstance(self.x_count, int) or isinstance(self.x_count, bool) or self.x_count < 2:
            errors.append(f"x_count must be an integer >= 2, got {self.x_count!r}")
        if self.x_spacing not in (None, "linear", "log"):
            errors.append(f"x_spacing must be 'linear' or 'log', got {self.x_spacing!r}")
        if not 0.0 <= self.x_margin_frac < 0.5:
            errors.append(f"x_margin_frac must lie in [0, 0.5), got {self.x_margin_frac!r}")
        if errors:
            raise InvalidArgument("\n".join(errors))
        object.__setattr__(self, "p_values", tuple(sorted({float(p) for p in self.p_values})))

    def for_case(self, case: InequalityCase) -> "GridSpec":
        """
        Resolve default exponents and check them against the case's p-domain.

        Raises:
            InvalidArgument: An exponent lies outside the case's p-domain
        """
        p_values = self.p_values or case.default_p
        outside = [p for p in p_values if not case.p_domain.contains(p)]
        if outside:
            raise InvalidArgument(f"{case.id}: p={outside} outside the case's p-domain {case.p_domain}")
        return GridSpec(p_values, self.x_count, self.x_spacing, self.x_margin_frac)


@dataclass(frozen=True)
class OutputRecord:
    """One evaluated point."""

    case_id: str
    label: str
    p: float
    x: float
    value: float
    status: Status
    t: float | None = None
    err_est: float | None = None


@dataclass(frozen=True)
class Violation:
    p: float
    x: float
    margin: float
    label: str


@dataclass
class MonotoneSummary:
    """Sign pattern of consecutive differences for one monotone claim at one exponent."""

    label: str
    p: float
    direction: Direction
    n: int
    positive: int
    negative: int
    flat: int
    violations: list[tuple[float, float]]
    observed_min: float
    observed_max: float
    claimed_range: tuple[float | None, float | None] | None = None
    range_ok: bool = True
    x: float | None = None

    @property
    def passed(self) -> bool:
        agreeing = self.positive if self.direction == "increasing" else self.negative
        return not self.violations and agreeing > 0 and self.range_ok


@dataclass
class ShapeSummary:
    """Second differences of log g on a uniform t-grid."""

    label: str
    p: float
    x: float
    shape: Shape
    n: int
    strict: int
    violations: list[tuple[float, float]]
    max_second_difference: float
    min_second_difference: float

    @property
    def strict_share(self) -> float:
        return self.strict / max(self.n - 2, 1)

    @property
    def passed(self) -> bool:
        return not self.violations and self.strict_share >= SHAPE_STRICT_SHARE


@dataclass
class LimitCheck:
    """Gaps to a claimed limit at three probes approaching the end."""

    label: str
    p: float
    end: str
    claimed: float
    probes: list[tuple[float, float, float]]
    tol: float | None
    shrinking: bool
    order: float | None

    @property
    def final_gap(self) -> float:
        return self.probes[-1][2]

    @property
    def passed(self) -> bool:
        return self.shrinking and (self.tol is None or self.final_gap <= self.tol)


@dataclass
class ScanReport:
    """Everything one scan found for one case."""

    case_id: str
    grid: GridSpec | None = None
    conjecture: bool = False
    best_constant_probe: bool = False
    min_margin: float | None = None
    argmin: tuple[float, float, str] | None = None
    min_margin_all: float | None = None
    argmin_all: tuple[float, float, str] | None = None
    violations: list[Violation] = field(default_factory=list)
    unresolved: int = 0
    evaluated: int = 0
    monotone: list[MonotoneSummary] = field(default_factory=list)
    shapes: list[ShapeSummary] = field(default_factory=list)
    limit_checks: list[LimitCheck] = field(default_factory=list)
    records: list[OutputRecord] = field(default_factory=list)
    sharp_for: dict[float, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """True when no margin, monotone, range, shape or limit claim failed."""
        return (
            not self.violations
            and all(m.passed for m in self.monotone)
            and all(s.passed for s in self.shapes)
            and all(c.passed for c in self.limit_checks)
        )

    @property
    def verdict(self) -> str:
        if self.best_constant_probe:
            return "sharp" if self.sharp_for and all(self.sharp_for.values()) else "not-sharp"
        if self.conjecture:
            return "evidence" if self.passed else "counterexample"
        return "pass" if self.passed else "fail"

    def summary_line(self) -> str:
        if self.min_margin is None:
            margin = "min_margin=none"
        else:
            p, x, label = self.argmin
            margin = f"min_margin={self.min_margin!r} argmin=(p={p!r}, x={x!r}, {label})"
        if self.min_margin_all is not None:
            margin += f" min_all={self.min_margin_all!r}"
        return (
            f"{self.case_id}: {self.verdict} {margin} violations={len(self.violations)} "
            f"unresolved={self.unresolved} monotone={len(self.monotone)} shapes={len(self.shapes)} "
            f"limits={len(self.limit_checks)}"
        )


# ============================================================================
# Helpers
# ============================================================================

def log_scan(func: Callable) -> Callable:
    """Decorator logging scan parameters on entry and the summary line on exit."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        logger.debug(f"🔎 Scan: {func.__name__}")
        logger.debug(f"  Params: {kwargs}")
        report = func(*args, **kwargs)
        logger.debug(report.summary_line())
        return report
    return wrapper


def _map(fn: Callable, items: list, workers: int) -> list:
    """Order-preserving map, on a thread pool when workers > 1."""
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _evaluate(label: str, p: float, x: float, fn: Callable[[], float]) -> float:
    try:
        value = fn()
    except (GentrigError, ArithmeticError, ValueError) as e:
        raise EvaluationError(label, p, x, e) from e
    if not math.isfinite(value):
        raise EvaluationError(label, p, x, ArithmeticError(f"non-finite value {value!r}"))
    return value


def loosened(cfg: EvalConfig) -> EvalConfig:
    """cfg with both tolerances multiplied by ERR_EST_LOOSEN."""
    return EvalConfig(cfg.rel_tol * ERR_EST_LOOSEN, cfg.abs_tol * ERR_EST_LOOSEN, cfg.max_quad_levels, cfg.max_iters)


def _classify(margin: float) -> Status:
    if margin > STRICTNESS_TOL:
        return "ok"
    if margin < -STRICTNESS_TOL:
        return "violation"
    return "unresolved"


def x_grid(domain: XDomain, p: PParam, grid: GridSpec, cfg: EvalConfig = DEFAULT_EVAL) -> list[float]:
    """
    Points of a case's x-domain for one exponent.

    Linear grids drop x_margin_frac of the domain at each open end; log grids
    start at LOG_GRID_START. A closed right end is included exactly.
    """
    upper = domain.upper(p, cfg)
    n = grid.x_count
    frac = grid.x_margin_frac
    spacing = grid.x_spacing or domain.spacing
    keep_end = domain.hi_closed or domain.unbounded

    if spacing == "log":
        start = LOG_GRID_START if upper > 10.0 * LOG_GRID_START else max(frac, LOG_GRID_START) * upper
        end = upper if keep_end else upper * (1.0 - max(frac, LOG_GRID_START))
        points = np.geomspace(start, end, n)
    elif frac > 0.0:
        end = upper if keep_end else upper * (1.0 - frac)
        points = np.linspace(frac * upper, end, n)
    else:
        # open interval without exclusion: drop the ends of a finer grid
        points = np.linspace(0.0, upper, n + 1)[1:] if keep_end else np.linspace(0.0, upper, n + 2)[1:-1]
    return [float(v) for v in points]


def _interior(lo: float, hi: float, n: int, spacing: str) -> list[float]:
    if spacing == "log":
        return [float(v) for v in np.geomspace(lo, hi, n + 2)[1:-1]]
    return [float(v) for v in np.linspace(lo, hi, n + 2)[1:-1]]


# ============================================================================
# Monotone, shape and limit summaries
# ============================================================================

def _monotone_summary(
    label: str,
    p: float,
    xs: list[float],
    values: list[float],
    direction: Direction,
    claimed_range: tuple[float | None, float | None] | None = None,
    x: float | None = None,
) -> MonotoneSummary:
    diffs = np.diff(np.asarray(values, dtype=float))
    positive = diffs > NOISE_TOL
    negative = diffs < -NOISE_TOL
    wrong = negative if direction == "increasing" else positive
    violations = [(xs[i + 1], float(diffs[i])) for i in np.flatnonzero(wrong)]

    range_ok = True
    if claimed_range is not None:
        lo, hi = claimed_range
        if lo is not None:
            range_ok &= min(values) >= lo - NOISE_TOL
        if hi is not None:
            range_ok &= max(values) <= hi + NOISE_TOL

    return MonotoneSummary(
        label=label,
        p=p,
        direction=direction,
        n=len(values),
        positive=int(positive.sum()),
        negative=int(negative.sum()),
        flat=int(len(diffs) - positive.sum() - negative.sum()),
        violations=violations,
        observed_min=float(min(values)),
        observed_max=float(max(values)),
        claimed_range=claimed_range,
        range_ok=bool(range_ok),
        x=x,
    )


def _shape_summary(label: str, p: float, x: float, ts: list[float], values: list[float], shape: Shape) -> ShapeSummary:
    bad = [(t, v) for t, v in zip(ts, values) if not v > 0.0]
    if bad:
        t, v = bad[0]
        raise NonPositiveValue(f"{label}: log-shape scan needs g > 0, got g({t!r}) = {v!r} at p={p!r}, x={x!r}")

    logs = np.log(np.asarray(values, dtype=float))
    second = logs[:-2] - 2.0 * logs[1:-1] + logs[2:]
    oriented = second if shape == "concave" else -second
    violations = [(ts[i + 1], float(second[i])) for i in np.flatnonzero(oriented > NOISE_TOL)]
    return ShapeSummary(
        label=label,
        p=p,
        x=x,
        shape=shape,
        n=len(values),
        strict=int((oriented < 0.0).sum()),
        violations=violations,
        max_second_difference=float(second.max()),
        min_second_difference=float(second.min()),
    )


def _limit_check(case_id: str, claim: LimitClaim, p: PParam, upper: float, cfg: EvalConfig) -> LimitCheck:
    if claim.end == "left":
        xs = distances = list(LIMIT_PROBES)
    elif claim.end == "infinity":
        xs = list(INFINITY_PROBES)
        distances = [1.0 / v for v in xs]
    else:
        distances = [delta * upper for delta in LIMIT_PROBES]
        xs = [upper - d for d in distances]

    claimed = claim.value(p, cfg)
    probes = []
    for x in xs:
        value = _evaluate(case_id, p.p, x, lambda: claim.function(p, x, cfg))
        probes.append((x, value, abs(value - claimed)))

    gaps = [g for _, _, g in probes]
    shrinking = all(later <= earlier or later <= NOISE_TOL for earlier, later in zip(gaps, gaps[1:]))

    order = None
    if gaps[-2] > 0.0 and gaps[-1] > 0.0 and gaps[-2] != gaps[-1]:
        order = math.log(gaps[-2] / gaps[-1]) / math.log(distances[-2] / distances[-1])

    tol = claim.tol
    if tol is None and claim.end == "left":
        tol = DEFAULT_LIMIT_TOL
    return LimitCheck(claim.name, p.p, claim.end, claimed, probes, tol, shrinking, order)


# ============================================================================
# Scan operations
# ============================================================================

@log_scan
def scan_margin(
    case: InequalityCase,
    grid: GridSpec | None = None,
    cfg: EvalConfig = DEFAULT_EVAL,
    workers: int = 1,
) -> ScanReport:
    """
    Evaluate every margin of a case at every grid point.

    Points with margin > STRICTNESS_TOL hold, points below -STRICTNESS_TOL
    are violations, the rest are counted as unresolved. min_margin and argmin
    range over resolved points only; min_margin_all and argmin_all over every
    point. Each record carries err_est, the change of its margin under
    loosened(cfg).

    Raises:
        InvalidArgument: grid outside the case's p-domain
        EvaluationError: a margin failed at some (p, x)
    """
    grid = (grid or GridSpec()).for_case(case)
    report = ScanReport(case.id, grid, conjecture=case.is_conjecture)
    _fill_margins(report, case.id, [(m.name, m.evaluate) for m in case.margins], case.x_domain, grid, cfg, workers)
    return report


def _fill_margins(
    report: ScanReport,
    case_id: str,
    margins: list[tuple[str, Callable]],
    domain: XDomain,
    grid: GridSpec,
    cfg: EvalConfig,
    workers: int,
) -> None:
    if not margins:
        return
    points = []
    for p_value in grid.p_values:
        p = PParam(p_value)
        points.extend((p, x) for x in x_grid(domain, p, grid, cfg))

    loose = loosened(cfg)

    def at_point(point: tuple[PParam, float]) -> list[tuple[float, float]]:
        p, x = point
        values = []
        for _, fn in margins:
            margin = _evaluate(case_id, p.p, x, lambda fn=fn: fn(p, x, cfg))
            rough = _evaluate(case_id, p.p, x, lambda fn=fn: fn(p, x, loose))
            values.append((margin, abs(margin - rough)))
        return values

    for (p, x), values in zip(points, _map(at_point, points, workers)):
        for (label, _), (margin, err_est) in zip(margins, values):
            status = _classify(margin)
            report.evaluated += 1
            report.records.append(OutputRecord(case_id, label, p.p, x, margin, status, err_est=err_est))
            if report.min_margin_all is None or margin < report.min_margin_all:
                report.min_margin_all = margin
                report.argmin_all = (p.p, x, label)
            if status == "unresolved":
                report.unresolved += 1
                continue
            if status == "violation":
                report.violations.append(Violation(p.p, x, margin, label))
            if report.min_margin is None or margin < report.min_margin:
                report.min_margin = margin
                report.argmin = (p.p, x, label)


@log_scan
def scan_monotone(
    f: Callable[[float], float],
    interval: tuple[float, float],
    n: int,
    direction: Direction = "increasing",
    *,
    spacing: Literal["linear", "log"] = "linear",
    label: str = "f",
    claimed_range: tuple[float | None, float | None] | None = None,
) -> ScanReport:
    """
    Sign pattern of consecutive differences of f on n interior samples.

    A monotone claim passes when no difference has the wrong sign beyond
    NOISE_TOL and at least one has the claimed sign.

    Raises:
        InvalidArgument: n < 3 or an empty interval
    """
    lo, hi = interval
    if isinstance(n, bool) or int(n) != n or n < 3:
        raise InvalidArgument(f"scan_monotone needs n >= 3, got {n!r}")
    if not lo < hi:
        raise InvalidArgument(f"scan_monotone needs lo < hi, got ({lo!r}, {hi!r})")
    xs = _interior(lo, hi, int(n), spacing)
    values = [_evaluate(label, math.nan, x, lambda x=x: f(x)) for x in xs]
    report = ScanReport(label)
    report.monotone.append(_monotone_summary(label, math.nan, xs, values, direction, claimed_range))
    return report


@log_scan
def scan_log_shape(
    g: Callable[[float], float],
    t_interval: tuple[float, float],
    n: int,
    shape: Shape = "concave",
    *,
    label: str = "g",
) -> ScanReport:
    """
    Second differences of log g on a uniform t-grid including both ends.

    Log-concavity passes when every second difference is <= NOISE_TOL and at
    least SHAPE_STRICT_SHARE of them are strictly negative; convexity is the
    mirror image.

    Raises:
        InvalidArgument: n < 5 or an empty interval
        NonPositiveValue: a sample of g is <= 0
    """
    lo, hi = t_interval
    if isinstance(n, bool) or int(n) != n or n < 5:
        raise InvalidArgument(f"scan_log_shape needs n >= 5, got {n!r}")
    if not lo < hi:
        raise InvalidArgument(f"scan_log_shape needs lo < hi, got ({lo!r}, {hi!r})")
    ts = [float(t) for t in np.linspace(lo, hi, int(n))]
    values = [_evaluate(label, math.nan, t, lambda t=t: g(t)) for t in ts]
    report = ScanReport(label)
    report.shapes.append(_shape_summary(label, math.nan, math.nan, ts, values, shape))
    return report


@log_scan
def limit_check(case: InequalityCase, grid: GridSpec | None = None, cfg: EvalConfig = DEFAULT_EVAL) -> ScanReport:
    """
    Gaps between each claimed endpoint limit and probes approaching it.

    x -> 0 probes at 1e-2, 1e-3, 1e-4; a finite right end X at X(1 - δ) for
    the same δ; +∞ at 10, 20, 40. Gaps must not grow; x -> 0 limits also
    need the last gap within the claim's tolerance.
    """
    grid = (grid or GridSpec()).for_case(case)
    report = ScanReport(case.id, grid, conjecture=case.is_conjecture)
    _fill_limits(report, case, grid, cfg)
    return report


def _fill_limits(report: ScanReport, case: InequalityCase, grid: GridSpec, cfg: EvalConfig) -> None:
    for p_value in grid.p_values:
        p = PParam(p_value)
        for claim in case.limits:
            upper = math.nan
            if claim.end == "right":
                # right limits belong to the monotone claim's interval
                interval = next((m.interval for m in case.monotone if m.function is claim.function), case.x_domain)
                upper = interval.upper(p, cfg)
            report.limit_checks.append(_limit_check(case.id, claim, p, upper, cfg))


def _fill_monotone(report: ScanReport, case: InequalityCase, grid: GridSpec, cfg: EvalConfig, workers: int) -> None:
    for claim in case.monotone:
        for p_value in grid.p_values:
            p = PParam(p_value)
            xs = x_grid(claim.interval, p, grid, cfg)
            values = _map(lambda x: _evaluate(case.id, p.p, x, lambda: claim.function(p, x, cfg)), xs, workers)
            claimed_range = None
            if claim.range_lo is not None or claim.range_hi is not None:
                claimed_range = (
                    claim.range_lo(p, cfg) if claim.range_lo else None,
                    claim.range_hi(p, cfg) if claim.range_hi else None,
                )
            report.monotone.append(
                _monotone_summary(claim.name, p.p, xs, values, claim.direction, claimed_range)
            )


def _fill_shapes(report: ScanReport, case: InequalityCase, grid: GridSpec, cfg: EvalConfig, workers: int) -> None:
    loose = loosened(cfg)
    for claim in case.shapes:
        for p_value in grid.p_values:
            p = PParam(p_value)
            for x in case.x_points:
                lo, hi = claim.t_interval(p, x, cfg)
                ts = [float(t) for t in np.linspace(lo, hi, SHAPE_T_COUNT)]
                values = _map(lambda t: _evaluate(case.id, p.p, x, lambda: claim.function(p, x, t, cfg)), ts, workers)
                rough = _map(lambda t: _evaluate(case.id, p.p, x, lambda: claim.function(p, x, t, loose)), ts, workers)
                for t, value, other in zip(ts, values, rough):
                    report.records.append(
                        OutputRecord(case.id, claim.name, p.p, x, value, "ok", t=t, err_est=abs(value - other))
                    )
                report.monotone.append(_monotone_summary(claim.name, p.p, ts, values, claim.direction, x=x))
                report.shapes.append(_shape_summary(claim.name, p.p, x, ts, values, claim.shape))


@log_scan
def run_case(
    case: InequalityCase,
    grid: GridSpec | None = None,
    cfg: EvalConfig = DEFAULT_EVAL,
    workers: int = 1,
) -> ScanReport:
    """
    Margins, monotone/range claims, limits and t-shape claims of one case.

    Raises:
        InvalidArgument: grid outside the case's p-domain
        EvaluationError: an evaluation failed at some point
    """
    grid = (grid or GridSpec()).for_case(case)
    report = ScanReport(case.id, grid, conjecture=case.is_conjecture)
    _fill_margins(report, case.id, [(m.name, m.evaluate) for m in case.margins], case.x_domain, grid, cfg, workers)
    _fill_monotone(report, case, grid, cfg, workers)
    _fill_limits(report, case, grid, cfg)
    _fill_shapes(report, case, grid, cfg, workers)
    report.records.sort(key=lambda r: (r.case_id, r.p, r.x))
    return report


@log_scan
def explore_conjecture(
    case_id: str,
    grid: GridSpec | None = None,
    cfg: EvalConfig = DEFAULT_EVAL,
    workers: int = 1,
) -> ScanReport:
    """
    Run a conjecture's scans and report the evidence; never a proof.

    Raises:
        UnknownCase: case_id is not a registered conjecture
    """
    if case_id not in CONJECTURE_IDS:
        raise UnknownCase(f"{case_id!r} is not a conjecture; choose one of {', '.join(CONJECTURE_IDS)}")
    report = run_case(get_case(case_id), grid, cfg, workers)
    if not report.passed:
        logger.warning(f"🚩 {case_id}: counterexample evidence found ({len(report.violations)} margin violations)")
    return report


@log_scan
def probe_best_constant(
    case: InequalityCase,
    grid: GridSpec | None = None,
    cfg: EvalConfig = DEFAULT_EVAL,
    rel_shift: float = BEST_CONSTANT_SHIFT,
    workers: int = 1,
) -> ScanReport:
    """
    Move a sharp exponent by rel_shift toward the excluded side and rescan.

    The margin is exponent' - ratio when the inequality holds below the
    exponent, ratio - exponent' otherwise. The constant is confirmed sharp
    for an exponent p when at least one grid point is violated.

    Raises:
        InvalidArgument: the case has no best constant, or rel_shift <= 0
    """
    constant = case.best_constant
    if constant is None:
        raise InvalidArgument(f"{case.id} declares no best constant")
    if not rel_shift > 0.0:
        raise InvalidArgument(f"rel_shift must be > 0, got {rel_shift!r}")

    grid = (grid or GridSpec()).for_case(case)
    sign = -1.0 if constant.holds_below else 1.0

    def shifted(p: PParam, x: float, cfg: EvalConfig) -> float:
        exponent = constant.alpha(p) * (1.0 + sign * rel_shift)
        return -sign * (exponent - constant.ratio(p, x, cfg))

    label = f"exponent shifted by {sign * rel_shift:+g}"
    report = ScanReport(case.id, grid, best_constant_probe=True)
    _fill_margins(report, case.id, [(label, shifted)], constant.interval, grid, cfg, workers)
    for p in grid.p_values:
        report.sharp_for[p] = any(v.p == p for v in report.violations)
    return report


def run_cases(
    cases: Iterable[InequalityCase],
    grid: GridSpec | None = None,
    cfg: EvalConfig = DEFAULT_EVAL,
    workers: int = 1,
) -> list[ScanReport]:
    """run_case over several cases, in the given order."""
    return [run_case(case, grid, cfg, workers) for case in cases]
