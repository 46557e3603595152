"""
Registry of inequality, monotonicity and log-shape claims.

Each InequalityCase turns one statement about the generalized functions into
evaluable pieces:

- margins: (p, x) -> real, positive exactly where the strict inequality holds
- monotone claims: a function of x claimed increasing or decreasing, with an
  optional claimed range and endpoint limits
- shape claims: t -> g(p, x, t) claimed monotone and log-concave/convex in t

Near x = 0 most two-sided comparisons agree to many digits. The evaluators
here work with the cancellation-free building blocks
D = 1 - sin_p(x)/x, G = sinh_p(x)/x - 1, log cos_p and log cosh_p, so that
the margins keep relative accuracy as they vanish.
"""

import functools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Literal, NamedTuple

from . import phyp, ptrig
from .config import EvalConfig
from .errors import UnknownCase
from .ptrig import PParam

logger = logging.getLogger(__name__)

Evaluator = Callable[[PParam, float, EvalConfig], float]
Bound = Callable[[PParam, EvalConfig], float]
TEvaluator = Callable[[PParam, float, float, EvalConfig], float]

Kind = Literal["margin", "monotone", "range", "log-concavity", "conjecture"]
Direction = Literal["increasing", "decreasing"]
Shape = Literal["concave", "convex"]

# Lower end of log-spaced x-grids on (0, X]
LOG_GRID_START = 1e-3

# Upper end of scans for claims made for every x > 0
X_MAX = 10.0

# Ratio-lemma constant for the hyperbolic parts
HYPERBOLIC_K = 2.0

# Ratio-lemma constant for the tangent part, as a fraction of π_p/2
TANGENT_K_FRACTION = 0.9


# ============================================================================
# Domain types
# ============================================================================

@dataclass(frozen=True)
class PDomain:
    """Interval of admissible exponents with open/closed ends."""

    lo: float = 1.0
    hi: float = math.inf
    lo_open: bool = True
    hi_open: bool = True

    def contains(self, p: float) -> bool:
        above = p > self.lo if self.lo_open else p >= self.lo
        below = p < self.hi if self.hi_open else p <= self.hi
        return above and below

    def __str__(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open or math.isinf(self.hi) else "]"
        hi = "inf" if math.isinf(self.hi) else repr(self.hi)
        return f"{left}{self.lo!r}, {hi}{right}"


@dataclass(frozen=True)
class XDomain:
    """
    Scanned x-interval (0, hi).

    With relative=True, hi is a multiple of π_p/2; otherwise an absolute
    bound. unbounded marks claims made for every x > 0 that are scanned on a
    finite window.
    """

    hi: float = 1.0
    relative: bool = True
    hi_closed: bool = False
    spacing: Literal["linear", "log"] = "linear"
    unbounded: bool = False

    def upper(self, p: PParam, cfg: EvalConfig) -> float:
        if self.relative:
            return self.hi * ptrig.pi_p(p, cfg).half_pi_p
        return self.hi

    def __str__(self) -> str:
        if self.unbounded:
            return f"(0, inf) scanned on [{LOG_GRID_START!r}, {self.hi!r}]"
        hi = f"{self.hi!r}·π_p/2" if self.relative else repr(self.hi)
        right = "]" if self.hi_closed else ")"
        return f"(0, {hi}{right}"


HALF_PI = XDomain()
HALF_PI_CLOSED = XDomain(hi_closed=True)
POSITIVE = XDomain(hi=X_MAX, relative=False, spacing="log", unbounded=True)
UNIT = XDomain(hi=1.0, relative=False)


@dataclass(frozen=True)
class Margin:
    """LHS - RHS of one inequality, oriented so that > 0 means it holds."""

    name: str
    evaluate: Evaluator
    strict: bool = True


@dataclass(frozen=True)
class LimitClaim:
    """
    Claimed limit of a function at an end of its interval.

    end is "left" (x -> 0), "right" (x -> upper end of the domain) or
    "infinity". tol bounds the final gap; None makes the check trend-only.
    """

    name: str
    function: Evaluator
    end: Literal["left", "right", "infinity"]
    value: Bound
    tol: float | None = None


@dataclass(frozen=True)
class MonotoneClaim:
    """A function of x claimed strictly monotone on an interval, optionally onto a range."""

    name: str
    function: Evaluator
    direction: Direction
    interval: XDomain
    range_lo: Bound | None = None
    range_hi: Bound | None = None


@dataclass(frozen=True)
class ShapeClaim:
    """g(t) = F(x/t)^t claimed monotone and log-concave/convex in t."""

    name: str
    function: TEvaluator
    direction: Direction
    shape: Shape
    t_interval: Callable[[PParam, float, EvalConfig], tuple[float, float]]


@dataclass(frozen=True)
class BestConstant:
    """
    Exponent claimed sharp, probed by perturbing it toward the excluded side.

    ratio(p, x) is the log ratio compared against alpha(p). With
    holds_below, the inequality holds iff ratio < exponent; otherwise iff
    ratio > exponent.
    """

    alpha: Callable[[PParam], float]
    ratio: Evaluator
    holds_below: bool
    interval: XDomain


@dataclass(frozen=True)
class InequalityCase:
    """One registry entry."""

    id: str
    description: str
    anchor: str
    kind: Kind
    p_domain: PDomain
    x_domain: XDomain
    default_p: tuple[float, ...]
    margins: tuple[Margin, ...] = ()
    monotone: tuple[MonotoneClaim, ...] = ()
    limits: tuple[LimitClaim, ...] = ()
    shapes: tuple[ShapeClaim, ...] = ()
    x_points: tuple[float, ...] = ()
    curves: tuple[Margin, ...] = ()
    best_constant: BestConstant | None = None

    @property
    def is_conjecture(self) -> bool:
        return self.kind == "conjecture"


OPEN_ONE = PDomain(1.0)
UP_TO_TWO = PDomain(1.0, 2.0, hi_open=False)
FROM_TWO = PDomain(2.0, lo_open=False)
ABOVE_TWO = PDomain(2.0)

P_UP_TO_TWO = (1.1, 1.5, 2.0)
P_FROM_TWO = (2.0, 3.0, 5.0, 10.0)
P_ABOVE_TWO = (2.5, 3.0, 5.0, 10.0)
P_ALL = (1.1, 1.5, 2.0, 3.0, 5.0, 10.0)


# ============================================================================
# Building blocks (memoized per point)
# ============================================================================

class TrigTerms(NamedTuple):
    sin: float
    cos: float
    tan: float
    deficit: float
    log_cos: float
    one_minus_cos: float


class HypTerms(NamedTuple):
    sinh: float
    cosh: float
    tanh: float
    excess: float
    log_cosh: float


@functools.lru_cache(maxsize=1 << 16)
def _trig(p: PParam, x: float, cfg: EvalConfig) -> TrigTerms:
    """sin_p-family values at 0 < x <= π_p/2; x = π_p/2 gives cos = 0, tan = inf."""
    sin = ptrig.sin_p(x, p, cfg).value
    cos = ptrig.cos_p(x, p, cfg).value
    deficit = ptrig.sin_ratio_deficit(x, p, cfg).value
    if cos > 0.0:
        log_cos = ptrig.log_cos_p(x, p, cfg).value
        return TrigTerms(sin, cos, sin / cos, deficit, log_cos, -math.expm1(log_cos))
    return TrigTerms(sin, 0.0, math.inf, deficit, -math.inf, 1.0)


@functools.lru_cache(maxsize=1 << 16)
def _hyp(p: PParam, x: float, cfg: EvalConfig) -> HypTerms:
    sinh = phyp.sinh_p(x, p, cfg).value
    return HypTerms(
        sinh=sinh,
        cosh=phyp.cosh_p(x, p, cfg).value,
        tanh=phyp.tanh_p(x, p, cfg).value,
        excess=phyp.sinh_ratio_excess(x, p, cfg).value,
        log_cosh=phyp.log_cosh_p(x, p, cfg).value,
    )


def _half_pi(p: PParam, cfg: EvalConfig) -> float:
    return ptrig.pi_p(p, cfg).half_pi_p


def _constant(value: float) -> Bound:
    return lambda p, cfg: value


def _exponent(p: PParam) -> float:
    return 1.0 / (1.0 + p.p)


def _tanh_ratio(h: HypTerms) -> float:
    # tanh_p(x)/x = (1 + G) / cosh_p(x)
    return (1.0 + h.excess) * math.exp(-h.log_cosh)


# ============================================================================
# Margins and characteristic functions
# ============================================================================

def _tan_tanh_slope(p: PParam, x: float, cfg: EvalConfig) -> float:
    # d/dx (tan_p^(p-2) - tanh_p^(p-2))
    t, h = _trig(p, x, cfg), _hyp(p, x, cfg)
    k = p.p
    return (k - 2.0) * (t.tan ** (k - 3.0) * (1.0 + t.tan ** k) - h.tanh ** (k - 3.0) * (1.0 - h.tanh ** k))


def _tan_tanh_gap(p: PParam, x: float, cfg: EvalConfig) -> float:
    t, h = _trig(p, x, cfg), _hyp(p, x, cfg)
    return t.tan ** (p.p - 2.0) - h.tanh ** (p.p - 2.0)


def _cos_cosh(p: PParam, x: float, cfg: EvalConfig) -> float:
    return math.exp(_trig(p, x, cfg).log_cos + _hyp(p, x, cfg).log_cosh)


def _cos_cosh_margin(p: PParam, x: float, cfg: EvalConfig) -> float:
    return -math.expm1(_trig(p, x, cfg).log_cos + _hyp(p, x, cfg).log_cosh)


def _sin_sinh_geometric(p: PParam, x: float, cfg: EvalConfig) -> float:
    # x/sinh_p - sin_p/x = D - G/(1 + G)
    t, h = _trig(p, x, cfg), _hyp(p, x, cfg)
    return t.deficit - h.excess / (1.0 + h.excess)


def _mit_ada_lower(p: PParam, x: float, cfg: EvalConfig) -> float:
    # sin_p/x - cos_p^α
    t = _trig(p, x, cfg)
    return -math.expm1(_exponent(p) * t.log_cos) - t.deficit


def _mit_ada_upper(p: PParam, x: float, cfg: EvalConfig) -> float:
    return _trig(p, x, cfg).deficit


def _mit_ada_ratio(p: PParam, x: float, cfg: EvalConfig) -> float:
    # log(sin_p(x)/x) / log cos_p(x)
    t = _trig(p, x, cfg)
    return math.log1p(-t.deficit) / t.log_cos


def _lazarevic_lower(p: PParam, x: float, cfg: EvalConfig) -> float:
    # sinh_p/x - cosh_p^α
    h = _hyp(p, x, cfg)
    return h.excess - math.expm1(_exponent(p) * h.log_cosh)


def _lazarevic_upper(p: PParam, x: float, cfg: EvalConfig) -> float:
    # cosh_p - sinh_p/x
    h = _hyp(p, x, cfg)
    return math.expm1(h.log_cosh) - h.excess


def _lazarevic_ratio(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    return math.log1p(h.excess) / h.log_cosh


def _chain_terms(p: PParam, x: float, cfg: EvalConfig) -> tuple[float, float, float, float, float]:
    """(x/sinh_p)^(1+p), 1/cosh_p, tanh_p/x, sin_p/x, x/sinh_p."""
    t, h = _trig(p, x, cfg), _hyp(p, x, cfg)
    log_ratio = math.log1p(h.excess)
    return (
        math.exp(-(1.0 + p.p) * log_ratio),
        math.exp(-h.log_cosh),
        _tanh_ratio(h),
        1.0 - t.deficit,
        1.0 / (1.0 + h.excess),
    )


def _chain_first(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    power = math.exp(-(1.0 + p.p) * math.log1p(h.excess))
    return power * math.expm1((1.0 + p.p) * math.log1p(h.excess) - h.log_cosh)


def _chain_second(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    return h.excess * math.exp(-h.log_cosh)


def _chain_third(p: PParam, x: float, cfg: EvalConfig) -> float:
    # sin_p/x - tanh_p/x
    t, h = _trig(p, x, cfg), _hyp(p, x, cfg)
    return -math.expm1(-h.log_cosh) - t.deficit - h.excess * math.exp(-h.log_cosh)


def _chain_curve(index: int) -> Evaluator:
    return lambda p, x, cfg: _chain_terms(p, x, cfg)[index]


def _huygens_trig(p: PParam, x: float, cfg: EvalConfig) -> float:
    # (p+1) sin_p/x + 1/cos_p - (p+2)
    t = _trig(p, x, cfg)
    return math.expm1(-t.log_cos) - (p.p + 1.0) * t.deficit


def _huygens_trig_lhs(p: PParam, x: float, cfg: EvalConfig) -> float:
    t = _trig(p, x, cfg)
    return (p.p + 1.0) * (1.0 - t.deficit) + 1.0 / t.cos


def _huygens_hyp(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    return (p.p + 1.0) * h.excess + math.expm1(-h.log_cosh)


def _huygens_hyp_lhs(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    return (p.p + 1.0) * (1.0 + h.excess) + math.exp(-h.log_cosh)


def _huygens2_trig(p: PParam, x: float, cfg: EvalConfig) -> float:
    # p sin_p/x + tan_p/x - (1+p), tan_p/x = (1 - D)/cos_p
    t = _trig(p, x, cfg)
    return math.expm1(-t.log_cos) - t.deficit * math.exp(-t.log_cos) - p.p * t.deficit


def _huygens2_trig_lhs(p: PParam, x: float, cfg: EvalConfig) -> float:
    t = _trig(p, x, cfg)
    return p.p * (1.0 - t.deficit) + t.tan / x


def _huygens2_hyp(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    return p.p * h.excess + math.expm1(-h.log_cosh) + h.excess * math.exp(-h.log_cosh)


def _huygens2_hyp_lhs(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    return p.p * (1.0 + h.excess) + _tanh_ratio(h)


def _wilker(p: PParam, x: float, cfg: EvalConfig) -> float:
    # (sinh_p/x)^p + tanh_p/x - 2
    h = _hyp(p, x, cfg)
    return (
        math.expm1(p.p * math.log1p(h.excess))
        + math.expm1(-h.log_cosh)
        + h.excess * math.exp(-h.log_cosh)
    )


def _wilker_lhs(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    return (1.0 + h.excess) ** p.p + _tanh_ratio(h)


def _cusa_trig_first(p: PParam, x: float, cfg: EvalConfig) -> float:
    # (cos_p + p)/(1 + p) - sin_p/x
    t = _trig(p, x, cfg)
    return t.deficit - t.one_minus_cos / (1.0 + p.p)


def _cusa_trig_second(p: PParam, x: float, cfg: EvalConfig) -> float:
    # (cos_p + 2)/3 - (cos_p + p)/(1 + p)
    t = _trig(p, x, cfg)
    return (2.0 - p.p) * t.one_minus_cos / (3.0 * (1.0 + p.p))


def _cusa_hyp_small_p(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    return math.expm1(h.log_cosh) / (1.0 + p.p) - h.excess


def _cusa_hyp_large_p(p: PParam, x: float, cfg: EvalConfig) -> float:
    h = _hyp(p, x, cfg)
    return math.expm1(h.log_cosh) / 3.0 - h.excess


def _sinh_cos_bound(p: PParam, x: float, cfg: EvalConfig) -> float:
    # 3/(2 + cos_p) - sinh_p/x
    t, h = _trig(p, x, cfg), _hyp(p, x, cfg)
    return t.one_minus_cos / (2.0 + t.cos) - h.excess


def _sin_lower_first(p: PParam, x: float, cfg: EvalConfig) -> float:
    # sin_p/x - (p - 1 + cos_p)/p
    t = _trig(p, x, cfg)
    return t.one_minus_cos / p.p - t.deficit


def _sin_lower_second(p: PParam, x: float, cfg: EvalConfig) -> float:
    # (p - 1 + cos_p)/p - (1 + cos_p)/2
    t = _trig(p, x, cfg)
    return (p.p - 2.0) * t.one_minus_cos / (2.0 * p.p)


def _conj_log_ratio(p: PParam, x: float, cfg: EvalConfig) -> float:
    # log(x/sin_p) / log(sinh_p/x)
    t, h = _trig(p, x, cfg), _hyp(p, x, cfg)
    return -math.log1p(-t.deficit) / math.log1p(h.excess)


def _conj_cusa_sharp(p: PParam, x: float, cfg: EvalConfig) -> float:
    # (p + 1)/(p + cos_p) - sinh_p/x
    t, h = _trig(p, x, cfg), _hyp(p, x, cfg)
    return t.one_minus_cos / (p.p + t.cos) - h.excess


# ============================================================================
# Ratio lemma (sin, tan, sinh, tanh)
# ============================================================================

def _sin_ratio(p: PParam, x: float, cfg: EvalConfig) -> float:
    return 1.0 - _trig(p, x, cfg).deficit


def _tan_ratio(p: PParam, x: float, cfg: EvalConfig) -> float:
    return _trig(p, x, cfg).tan / x


def _sinh_ratio(p: PParam, x: float, cfg: EvalConfig) -> float:
    return 1.0 + _hyp(p, x, cfg).excess


def _tanh_ratio_of(p: PParam, x: float, cfg: EvalConfig) -> float:
    return _tanh_ratio(_hyp(p, x, cfg))


def _sin_lemma_lower(p: PParam, x: float, cfg: EvalConfig) -> float:
    # sin_p(x)/x - x/arcsin_p(x) on (0, 1)
    return _sin_ratio(p, x, cfg) - x / ptrig.arcsin_p(x, p, cfg).value


def _sin_lemma_upper(p: PParam, x: float, cfg: EvalConfig) -> float:
    # (2x/π_p)/arcsin_p(2x/π_p) - sin_p(x)/x
    y = x / _half_pi(p, cfg)
    return y / ptrig.arcsin_p(y, p, cfg).value - _sin_ratio(p, x, cfg)


def _tangent_k(p: PParam, cfg: EvalConfig) -> float:
    return TANGENT_K_FRACTION * _half_pi(p, cfg)


def _tan_lemma_lower(p: PParam, x: float, cfg: EvalConfig) -> float:
    return _tan_ratio(p, x, cfg) - x / ptrig.arctan_p(x, p, cfg).value


def _tan_lemma_upper(p: PParam, x: float, cfg: EvalConfig) -> float:
    # a x / arctan_p(a x) - tan_p(x)/x with a = tan_p(k)/k
    k = _tangent_k(p, cfg)
    y = ptrig.tan_p(k, p, cfg).value / k * x
    return y / ptrig.arctan_p(y, p, cfg).value - _tan_ratio(p, x, cfg)


def _sinh_lemma_lower(p: PParam, x: float, cfg: EvalConfig) -> float:
    # sinh_p(x)/x - x/arcsinh_p(x)
    return _sinh_ratio(p, x, cfg) - x / phyp.arcsinh_p(x, p, cfg).value


def _sinh_lemma_upper(p: PParam, x: float, cfg: EvalConfig) -> float:
    k = HYPERBOLIC_K
    y = phyp.sinh_p(k, p, cfg).value / k * x
    return y / phyp.arcsinh_p(y, p, cfg).value - _sinh_ratio(p, x, cfg)


def _tanh_lemma_lower(p: PParam, x: float, cfg: EvalConfig) -> float:
    # tanh_p(x)/x - x/arctanh_p(x) on (0, 1)
    return _tanh_ratio_of(p, x, cfg) - x / phyp.arctanh_p(x, p, cfg).value


def _tanh_lemma_upper(p: PParam, x: float, cfg: EvalConfig) -> float:
    k = HYPERBOLIC_K
    y = phyp.tanh_p(k, p, cfg).value / k * x
    return y / phyp.arctanh_p(y, p, cfg).value - _tanh_ratio_of(p, x, cfg)


# ============================================================================
# Parametric family F(x/t)^t
# ============================================================================

def _t_cos(p: PParam, x: float, t: float, cfg: EvalConfig) -> float:
    return math.exp(t * ptrig.log_cos_p(x / t, p, cfg).value)


def _t_sin(p: PParam, x: float, t: float, cfg: EvalConfig) -> float:
    return ptrig.sin_p(x / t, p, cfg).value ** t


def _t_sinh(p: PParam, x: float, t: float, cfg: EvalConfig) -> float:
    return phyp.sinh_p(x / t, p, cfg).value ** t


def _t_cosh(p: PParam, x: float, t: float, cfg: EvalConfig) -> float:
    return math.exp(t * phyp.log_cosh_p(x / t, p, cfg).value)


# Upper end of every t-interval
T_MAX = 6.0

# Relative offset of the trig t-intervals above their open end 2x/π_p
T_OPEN_END_OFFSET = 1e-3

# Lower end of the hyperbolic t-intervals
T_MIN_HYPERBOLIC = 0.1


def _t_interval_trig(p: PParam, x: float, cfg: EvalConfig) -> tuple[float, float]:
    return x / _half_pi(p, cfg) * (1.0 + T_OPEN_END_OFFSET), T_MAX


def _t_interval_hyp(p: PParam, x: float, cfg: EvalConfig) -> tuple[float, float]:
    return T_MIN_HYPERBOLIC, T_MAX


# ============================================================================
# Case Registry
# ============================================================================

def _ratio_lemma(
    name: str,
    description: str,
    ratio: Evaluator,
    direction: Direction,
    interval: XDomain,
    margin_domain: XDomain,
    lower: Evaluator,
    upper: Evaluator,
    range_lo: Bound,
    range_hi: Bound | None,
    limits: tuple[LimitClaim, ...],
) -> InequalityCase:
    return InequalityCase(
        id=f"ratio_monotone_{name}",
        description=description,
        anchor="monotone ratio lemma with arc-function bounds",
        kind="range",
        p_domain=OPEN_ONE,
        x_domain=margin_domain,
        default_p=P_ALL,
        margins=(Margin("lower", lower), Margin("upper", upper)),
        monotone=(MonotoneClaim(f"{name}_p(x)/x", ratio, direction, interval, range_lo, range_hi),),
        limits=limits,
    )


def _t_param(name: str, description: str, function: TEvaluator, direction: Direction, shape: Shape, trig: bool) -> InequalityCase:
    return InequalityCase(
        id=f"t_param_{name}",
        description=description,
        anchor="parametric monotonicity and log-shape theorem",
        kind="log-concavity",
        p_domain=OPEN_ONE,
        x_domain=POSITIVE,
        default_p=(2.0, 3.0),
        shapes=(
            ShapeClaim(
                f"{name}_p(x/t)^t",
                function,
                direction,
                shape,
                _t_interval_trig if trig else _t_interval_hyp,
            ),
        ),
        x_points=(0.5, 1.0),
    )


_CASES = (
    InequalityCase(
        id="lem_tan_tanh_monotone",
        description="tan_p(x)^(p-2) - tanh_p(x)^(p-2) is strictly increasing on (0, π_p/2), p > 2",
        anchor="tangent/hyperbolic-tangent difference lemma",
        kind="monotone",
        p_domain=ABOVE_TWO,
        x_domain=HALF_PI,
        default_p=P_ABOVE_TWO,
        margins=(Margin("derivative", _tan_tanh_slope),),
        monotone=(MonotoneClaim("tan_p^(p-2) - tanh_p^(p-2)", _tan_tanh_gap, "increasing", HALF_PI),),
        limits=(LimitClaim("tan_p^(p-2) - tanh_p^(p-2)", _tan_tanh_gap, "left", _constant(0.0), 1e-3),),
    ),
    InequalityCase(
        id="lem_c_ch_decreasing_range",
        description="cos_p·cosh_p is strictly decreasing from (0, π_p/2) onto (0, 1); cos_p < 1/cosh_p",
        anchor="cosine/hyperbolic-cosine product lemma",
        kind="range",
        p_domain=OPEN_ONE,
        x_domain=HALF_PI,
        default_p=P_ALL,
        margins=(Margin("1 - cos_p·cosh_p", _cos_cosh_margin),),
        monotone=(MonotoneClaim("cos_p·cosh_p", _cos_cosh, "decreasing", HALF_PI, _constant(0.0), _constant(1.0)),),
        limits=(
            LimitClaim("cos_p·cosh_p", _cos_cosh, "left", _constant(1.0), 1e-3),
            LimitClaim("cos_p·cosh_p", _cos_cosh, "right", _constant(0.0)),
        ),
    ),
    InequalityCase(
        id="sin_sinh_geometric",
        description="sin_p(x)/x < x/sinh_p(x) on (0, π_p/2), p >= 2",
        anchor="sine/hyperbolic-sine geometric-mean inequality",
        kind="margin",
        p_domain=FROM_TWO,
        x_domain=HALF_PI,
        default_p=P_FROM_TWO,
        margins=(Margin("x/sinh_p - sin_p/x", _sin_sinh_geometric),),
    ),
    InequalityCase(
        id="mitrinovic_adamovic",
        description=(
            "cos_p(x)^(1/(1+p)) < sin_p(x)/x < 1 on (0, π_p/2); log(sin_p(x)/x)/log cos_p(x) "
            "decreasing onto (0, 1/(1+p))"
        ),
        anchor="Mitrinović-Adamović-type inequality with best constant 1/(1+p)",
        kind="margin",
        p_domain=OPEN_ONE,
        x_domain=HALF_PI,
        default_p=P_ALL,
        margins=(
            Margin("sin_p/x - cos_p^(1/(1+p))", _mit_ada_lower),
            Margin("1 - sin_p/x", _mit_ada_upper),
        ),
        monotone=(
            MonotoneClaim(
                "log(sin_p/x)/log cos_p",
                _mit_ada_ratio,
                "decreasing",
                HALF_PI,
                _constant(0.0),
                lambda p, cfg: _exponent(p),
            ),
        ),
        limits=(
            LimitClaim("log(sin_p/x)/log cos_p", _mit_ada_ratio, "left", lambda p, cfg: _exponent(p), 1e-3),
            LimitClaim("log(sin_p/x)/log cos_p", _mit_ada_ratio, "right", _constant(0.0)),
        ),
        best_constant=BestConstant(_exponent, _mit_ada_ratio, holds_below=True, interval=HALF_PI),
    ),
    InequalityCase(
        id="lazarevic",
        description=(
            "cosh_p(x)^(1/(1+p)) < sinh_p(x)/x < cosh_p(x) for x > 0; log(sinh_p(x)/x)/log cosh_p(x) "
            "increasing onto (1/(1+p), 1)"
        ),
        anchor="Lazarević-type inequality with best constants 1/(1+p) and 1",
        kind="margin",
        p_domain=OPEN_ONE,
        x_domain=POSITIVE,
        default_p=P_ALL,
        margins=(
            Margin("sinh_p/x - cosh_p^(1/(1+p))", _lazarevic_lower),
            Margin("cosh_p - sinh_p/x", _lazarevic_upper),
        ),
        monotone=(
            MonotoneClaim(
                "log(sinh_p/x)/log cosh_p",
                _lazarevic_ratio,
                "increasing",
                POSITIVE,
                lambda p, cfg: _exponent(p),
                _constant(1.0),
            ),
        ),
        limits=(
            LimitClaim("log(sinh_p/x)/log cosh_p", _lazarevic_ratio, "left", lambda p, cfg: _exponent(p), 1e-3),
            LimitClaim("log(sinh_p/x)/log cosh_p", _lazarevic_ratio, "infinity", _constant(1.0)),
        ),
        best_constant=BestConstant(_exponent, _lazarevic_ratio, holds_below=False, interval=POSITIVE),
    ),
    InequalityCase(
        id="chain_2_4_4",
        description="(x/sinh_p)^(1+p) < 1/cosh_p < tanh_p/x < sin_p/x < x/sinh_p on (0, π_p/2), p >= 2",
        anchor="five-term chain of ratio inequalities",
        kind="margin",
        p_domain=FROM_TWO,
        x_domain=HALF_PI,
        default_p=P_FROM_TWO,
        margins=(
            Margin("1/cosh_p - (x/sinh_p)^(1+p)", _chain_first),
            Margin("tanh_p/x - 1/cosh_p", _chain_second),
            Margin("sin_p/x - tanh_p/x", _chain_third),
            Margin("x/sinh_p - sin_p/x", _sin_sinh_geometric),
        ),
        curves=(
            Margin("(x/sinh_p)^(1+p)", _chain_curve(0)),
            Margin("1/cosh_p", _chain_curve(1)),
            Margin("tanh_p/x", _chain_curve(2)),
            Margin("sin_p/x", _chain_curve(3)),
            Margin("x/sinh_p", _chain_curve(4)),
        ),
    ),
    InequalityCase(
        id="huygens_trig",
        description="(p+1) sin_p(x)/x + 1/cos_p(x) > p+2 on (0, π_p/2)",
        anchor="Huygens-type inequality (trigonometric)",
        kind="margin",
        p_domain=OPEN_ONE,
        x_domain=HALF_PI,
        default_p=P_ALL,
        margins=(Margin("(p+1) sin_p/x + 1/cos_p - (p+2)", _huygens_trig),),
        limits=(LimitClaim("(p+1) sin_p/x + 1/cos_p", _huygens_trig_lhs, "left", lambda p, cfg: p.p + 2.0, 1e-3),),
    ),
    InequalityCase(
        id="huygens_hyp",
        description="(p+1) sinh_p(x)/x + 1/cosh_p(x) > p+2 for x > 0",
        anchor="Huygens-type inequality (hyperbolic)",
        kind="margin",
        p_domain=OPEN_ONE,
        x_domain=POSITIVE,
        default_p=P_ALL,
        margins=(Margin("(p+1) sinh_p/x + 1/cosh_p - (p+2)", _huygens_hyp),),
        limits=(LimitClaim("(p+1) sinh_p/x + 1/cosh_p", _huygens_hyp_lhs, "left", lambda p, cfg: p.p + 2.0, 1e-3),),
    ),
    InequalityCase(
        id="huygens2_trig",
        description="p sin_p(x)/x + tan_p(x)/x > 1+p on (0, π_p/2)",
        anchor="second Huygens-type inequality (trigonometric)",
        kind="margin",
        p_domain=OPEN_ONE,
        x_domain=HALF_PI,
        default_p=P_ALL,
        margins=(Margin("p sin_p/x + tan_p/x - (1+p)", _huygens2_trig),),
        limits=(LimitClaim("p sin_p/x + tan_p/x", _huygens2_trig_lhs, "left", lambda p, cfg: p.p + 1.0, 1e-3),),
    ),
    InequalityCase(
        id="huygens2_hyp",
        description="p sinh_p(x)/x + tanh_p(x)/x > 1+p for x > 0",
        anchor="second Huygens-type inequality (hyperbolic)",
        kind="margin",
        p_domain=OPEN_ONE,
        x_domain=POSITIVE,
        default_p=P_ALL,
        margins=(Margin("p sinh_p/x + tanh_p/x - (1+p)", _huygens2_hyp),),
        limits=(LimitClaim("p sinh_p/x + tanh_p/x", _huygens2_hyp_lhs, "left", lambda p, cfg: p.p + 1.0, 1e-3),),
    ),
    InequalityCase(
        id="wilker_hyp",
        description="(sinh_p(x)/x)^p + tanh_p(x)/x > 2 for x > 0",
        anchor="Wilker-type inequality",
        kind="margin",
        p_domain=OPEN_ONE,
        x_domain=POSITIVE,
        default_p=P_ALL,
        margins=(Margin("(sinh_p/x)^p + tanh_p/x - 2", _wilker),),
        limits=(LimitClaim("(sinh_p/x)^p + tanh_p/x", _wilker_lhs, "left", _constant(2.0), 1e-3),),
    ),
    InequalityCase(
        id="cusa_trig",
        description="sin_p(x)/x < (cos_p(x) + p)/(1 + p) <= (cos_p(x) + 2)/3 on (0, π_p/2], 1 < p <= 2",
        anchor="Cusa-Huygens-type inequality (trigonometric)",
        kind="margin",
        p_domain=UP_TO_TWO,
        x_domain=HALF_PI_CLOSED,
        default_p=P_UP_TO_TWO,
        margins=(
            Margin("(cos_p + p)/(1+p) - sin_p/x", _cusa_trig_first),
            Margin("(cos_p + 2)/3 - (cos_p + p)/(1+p)", _cusa_trig_second, strict=False),
        ),
    ),
    InequalityCase(
        id="cusa_hyp_small_p",
        description="sinh_p(x)/x < (cosh_p(x) + p)/(1 + p) for x > 0, 1 < p <= 2",
        anchor="Cusa-Huygens-type inequality (hyperbolic, p <= 2)",
        kind="margin",
        p_domain=UP_TO_TWO,
        x_domain=POSITIVE,
        default_p=P_UP_TO_TWO,
        margins=(Margin("(cosh_p + p)/(1+p) - sinh_p/x", _cusa_hyp_small_p),),
    ),
    InequalityCase(
        id="cusa_hyp_large_p",
        description="sinh_p(x)/x < (cosh_p(x) + 2)/3 for x > 0, p >= 2",
        anchor="Cusa-Huygens-type inequality (hyperbolic, p >= 2)",
        kind="margin",
        p_domain=FROM_TWO,
        x_domain=POSITIVE,
        default_p=P_FROM_TWO,
        margins=(Margin("(cosh_p + 2)/3 - sinh_p/x", _cusa_hyp_large_p),),
    ),
    InequalityCase(
        id="sinh_cos_bound",
        description="sinh_p(x)/x < 3/(2 + cos_p(x)) on (0, π_p/2), p >= 2",
        anchor="mixed hyperbolic-sine/cosine bound",
        kind="margin",
        p_domain=FROM_TWO,
        x_domain=HALF_PI,
        default_p=P_FROM_TWO,
        margins=(Margin("3/(2 + cos_p) - sinh_p/x", _sinh_cos_bound),),
    ),
    InequalityCase(
        id="sin_lower_bound",
        description="sin_p(x)/x > (p - 1 + cos_p(x))/p >= (1 + cos_p(x))/2 on (0, π_p/2], p >= 2",
        anchor="lower bound for sin_p(x)/x",
        kind="margin",
        p_domain=FROM_TWO,
        x_domain=HALF_PI_CLOSED,
        default_p=P_FROM_TWO,
        margins=(
            Margin("sin_p/x - (p - 1 + cos_p)/p", _sin_lower_first),
            Margin("(p - 1 + cos_p)/p - (1 + cos_p)/2", _sin_lower_second, strict=False),
        ),
    ),
    _ratio_lemma(
        "sin",
        "sin_p(x)/x decreasing onto (2/π_p, 1); x/arcsin_p(x) < sin_p(x)/x < (2x/π_p)/arcsin_p(2x/π_p) on (0, 1)",
        _sin_ratio,
        "decreasing",
        HALF_PI,
        UNIT,
        _sin_lemma_lower,
        _sin_lemma_upper,
        lambda p, cfg: 1.0 / _half_pi(p, cfg),
        _constant(1.0),
        (
            LimitClaim("sin_p(x)/x", _sin_ratio, "left", _constant(1.0), 1e-3),
            LimitClaim("sin_p(x)/x", _sin_ratio, "right", lambda p, cfg: 1.0 / _half_pi(p, cfg)),
        ),
    ),
    _ratio_lemma(
        "tan",
        "tan_p(x)/x increasing onto (1, inf); x/arctan_p(x) < tan_p(x)/x < ax/arctan_p(ax) on (0, k), "
        "k = 0.9·π_p/2, a = tan_p(k)/k",
        _tan_ratio,
        "increasing",
        HALF_PI,
        XDomain(hi=TANGENT_K_FRACTION),
        _tan_lemma_lower,
        _tan_lemma_upper,
        _constant(1.0),
        None,
        (LimitClaim("tan_p(x)/x", _tan_ratio, "left", _constant(1.0), 1e-3),),
    ),
    _ratio_lemma(
        "sinh",
        "sinh_p(x)/x increasing onto (1, inf); x/arcsinh_p(x) < sinh_p(x)/x < bx/arcsinh_p(bx) on (0, k), "
        "k = 2, b = sinh_p(k)/k",
        _sinh_ratio,
        "increasing",
        POSITIVE,
        XDomain(hi=HYPERBOLIC_K, relative=False, spacing="log"),
        _sinh_lemma_lower,
        _sinh_lemma_upper,
        _constant(1.0),
        None,
        (LimitClaim("sinh_p(x)/x", _sinh_ratio, "left", _constant(1.0), 1e-3),),
    ),
    _ratio_lemma(
        "tanh",
        "tanh_p(x)/x decreasing onto (0, 1); x/arctanh_p(x) < tanh_p(x)/x < cx/arctanh_p(cx) on (0, 1), "
        "k = 2, c = tanh_p(k)/k",
        _tanh_ratio_of,
        "decreasing",
        POSITIVE,
        UNIT,
        _tanh_lemma_lower,
        _tanh_lemma_upper,
        _constant(0.0),
        _constant(1.0),
        (
            LimitClaim("tanh_p(x)/x", _tanh_ratio_of, "left", _constant(1.0), 1e-3),
            LimitClaim("tanh_p(x)/x", _tanh_ratio_of, "infinity", _constant(0.0)),
        ),
    ),
    _t_param(
        "cos",
        "cos_p(x/t)^t is strictly increasing and log-concave in t on (2x/π_p, inf)",
        _t_cos,
        "increasing",
        "concave",
        trig=True,
    ),
    _t_param(
        "sin",
        "sin_p(x/t)^t is strictly decreasing and log-concave in t on (2x/π_p, inf)",
        _t_sin,
        "decreasing",
        "concave",
        trig=True,
    ),
    _t_param(
        "sinh",
        "sinh_p(x/t)^t is strictly decreasing and log-concave in t on (0, inf)",
        _t_sinh,
        "decreasing",
        "concave",
        trig=False,
    ),
    _t_param(
        "cosh",
        "cosh_p(x/t)^t is strictly decreasing and log-convex in t on (0, inf)",
        _t_cosh,
        "decreasing",
        "convex",
        trig=False,
    ),
    InequalityCase(
        id="conj_log_ratio",
        description="conjecture: log(x/sin_p(x))/log(sinh_p(x)/x) is strictly increasing on (0, π_p/2), p >= 2",
        anchor="open conjecture on the sine/hyperbolic-sine log ratio",
        kind="conjecture",
        p_domain=FROM_TWO,
        x_domain=HALF_PI,
        default_p=P_FROM_TWO,
        monotone=(MonotoneClaim("log(x/sin_p)/log(sinh_p/x)", _conj_log_ratio, "increasing", HALF_PI),),
    ),
    InequalityCase(
        id="conj_cusa_sharp",
        description="conjecture: sinh_p(x)/x < (p + 1)/(p + cos_p(x)) on (0, π_p/2), p > 2",
        anchor="open conjecture sharpening the mixed Cusa-type bound",
        kind="conjecture",
        p_domain=ABOVE_TWO,
        x_domain=HALF_PI,
        default_p=P_ABOVE_TWO,
        margins=(Margin("(p + 1)/(p + cos_p) - sinh_p/x", _conj_cusa_sharp),),
    ),
)

CASES: dict[str, InequalityCase] = {case.id: case for case in _CASES}

CONJECTURE_IDS = tuple(case.id for case in _CASES if case.is_conjecture)


def registry() -> list[InequalityCase]:
    """Every case, in fixed registry order."""
    return list(_CASES)


def get_case(case_id: str) -> InequalityCase:
    """
    Look up a case by id.

    Raises:
        UnknownCase: No case with that id
    """
    try:
        return CASES[case_id]
    except KeyError:
        raise UnknownCase(f"unknown case {case_id!r}; valid ids: {', '.join(CASES)}") from None
