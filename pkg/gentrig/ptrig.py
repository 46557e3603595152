"""
Generalized trigonometric functions.

arcsin_p(x) = ∫₀ˣ (1 - t^p)^(-1/p) dt on [0, 1] and π_p/2 = arcsin_p(1).
sin_p inverts arcsin_p on [0, π_p/2] and is extended to the real line by
sin_p(-x) = -sin_p(x), sin_p(π_p - x) = sin_p(x) and period 2π_p; cos_p is
its derivative, |sin_p|^p + |cos_p|^p = 1, and tan_p = sin_p / cos_p.

Near t = 1 the integrand behaves like (p(1 - t))^(-1/p). Everything above
t = 1/2 is integrated in the variable u with 1 - t = u^q, q = p/(p - 1),
where the integrand becomes bounded for every p > 1.
"""

import functools
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_EVAL, EvalConfig
from .errors import DomainError, PoleError
from .numerics import FuncValue, integrate, invert_monotone

# tan_p refuses arguments closer than this fraction of π_p to a pole
POLE_TOL_FRACTION = 1e-8

# arcsin_p integrates t directly on [0, HEAD_LIMIT], through the tail above it
HEAD_LIMIT = 0.5

# Below this s the tail ratio uses its two-term series; the next term is O(s^2)
TAIL_SERIES_CUTOFF = 1e-8

_CACHE_SIZE = 1 << 16


@dataclass(frozen=True)
class PParam:
    """Validated exponent 1 < p < ∞ of the function family."""

    p: float

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, (int, float)):
            raise DomainError(f"p must be a real number, got {self.p!r}")
        if not (math.isfinite(self.p) and self.p > 1.0):
            raise DomainError(f"p must satisfy 1 < p < inf, got {self.p!r}")
        object.__setattr__(self, "p", float(self.p))

    @property
    def conjugate(self) -> float:
        """Hölder conjugate q = p / (p - 1)."""
        return self.p / (self.p - 1.0)


def as_pparam(p: "PParam | float") -> PParam:
    """Accept either a PParam or a bare float exponent."""
    return p if isinstance(p, PParam) else PParam(p)


@dataclass(frozen=True)
class PiP:
    """π_p/2 for one exponent, with its quadrature error estimate."""

    p: PParam
    half_pi_p: float
    err_est: float = 0.0

    @property
    def value(self) -> float:
        """π_p itself."""
        return 2.0 * self.half_pi_p


def _require_finite(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def _signed(value: float, sign: float) -> float:
    # keeps zeros unsigned
    return sign * value if value else 0.0


# ============================================================================
# Integrands (vectorized)
# ============================================================================

def _arcsin_head_integrand(t: np.ndarray, p: float) -> np.ndarray:
    return np.exp(-np.log1p(-(t ** p)) / p)


def _arcsin_excess_integrand(t: np.ndarray, p: float) -> np.ndarray:
    # (1 - t^p)^(-1/p) - 1 without cancellation
    return np.expm1(-np.log1p(-(t ** p)) / p)


def _arcsin_tail_integrand(u: np.ndarray, p: float) -> np.ndarray:
    # q * (A(s))^(-1/p) with s = u^q and A(s) = (1 - (1 - s)^p) / s, A(0) = p
    q = p / (p - 1.0)
    s = u ** q
    # for p near 1, s turns subnormal inside the interval and the quotient loses its bits
    small = s < TAIL_SERIES_CUTOFF
    safe = np.where(small, 1.0, s)
    ratio = np.where(small, p * (1.0 - 0.5 * (p - 1.0) * s), -np.expm1(p * np.log1p(-safe)) / safe)
    return q * ratio ** (-1.0 / p)


def _arctan_head_integrand(t: np.ndarray, p: float) -> np.ndarray:
    return 1.0 / (1.0 + t ** p)


def _arctan_tail_integrand(s: np.ndarray, p: float) -> np.ndarray:
    # ∫ₓ^∞ dt / (1 + t^p) after t = 1/s
    return s ** (p - 2.0) / (1.0 + s ** p)


# ============================================================================
# Kernels on the primary branch
# ============================================================================

@functools.lru_cache(maxsize=256)
def _half_pi(p: float, cfg: EvalConfig) -> FuncValue:
    return integrate(functools.partial(_arcsin_tail_integrand, p=p), 0.0, 1.0, cfg)


@functools.lru_cache(maxsize=_CACHE_SIZE)
def _tail(w: float, p: float, cfg: EvalConfig) -> FuncValue:
    """∫ over [1 - w, 1] of (1 - t^p)^(-1/p) dt, for 0 <= w <= 1."""
    if w >= 1.0:
        return _half_pi(p, cfg)
    q = p / (p - 1.0)
    return integrate(functools.partial(_arcsin_tail_integrand, p=p), 0.0, w ** (1.0 / q), cfg)


def _arcsin_nonneg(x: float, p: float, cfg: EvalConfig) -> FuncValue:
    if x <= HEAD_LIMIT:
        return integrate(functools.partial(_arcsin_head_integrand, p=p), 0.0, x, cfg)
    half_pi = _half_pi(p, cfg)
    tail = _tail(1.0 - x, p, cfg)
    return FuncValue(half_pi.value - tail.value, half_pi.err_est + tail.err_est)


def _arcsin_slope(y: float, p: float) -> float:
    if y >= 1.0:
        return math.inf
    return math.exp(-math.log1p(-(y ** p)) / p)


def _tail_slope(w: float, p: float) -> float:
    base = -math.expm1(p * math.log1p(-w)) if w < 1.0 else 1.0
    return base ** (-1.0 / p) if base > 0.0 else math.inf


@functools.lru_cache(maxsize=_CACHE_SIZE)
def _primary(r: float, p: float, cfg: EvalConfig) -> tuple[FuncValue, FuncValue]:
    """
    (sin_p(r), cos_p(r)) for 0 <= r <= π_p/2.

    Below arcsin_p(1/2) the inversion runs on y = sin_p(r) in [0, 1/2];
    above it on w = 1 - sin_p(r) in [0, 1/2], so that cos_p keeps full
    relative accuracy up to π_p/2.
    """
    half_pi = _half_pi(p, cfg).value
    if r <= 0.0:
        return FuncValue(0.0), FuncValue(1.0)
    if r >= half_pi:
        return FuncValue(1.0), FuncValue(0.0)

    head_top = _arcsin_nonneg(HEAD_LIMIT, p, cfg).value
    if r <= head_top:
        res = invert_monotone(
            lambda y: _arcsin_nonneg(y, p, cfg).value,
            r,
            0.0,
            HEAD_LIMIT,
            lambda y: _arcsin_slope(y, p),
            cfg,
            guess=r,
        )
        y = res.value
        cos = (-math.expm1(p * math.log(y))) ** (1.0 / p) if y > 0.0 else 1.0
        cos_err = res.err_est * y ** (p - 1.0) * cos ** (1.0 - p)
        return FuncValue(y, res.err_est), FuncValue(cos, cos_err)

    q = p / (p - 1.0)
    tail_top = _tail(HEAD_LIMIT, p, cfg).value
    d = min(half_pi - r, tail_top)
    res = invert_monotone(
        lambda w: _tail(w, p, cfg).value,
        d,
        0.0,
        HEAD_LIMIT,
        lambda w: _tail_slope(w, p),
        cfg,
        guess=(d * p ** (1.0 / p) / q) ** q,
    )
    w = res.value
    base = -math.expm1(p * math.log1p(-w))
    cos = base ** (1.0 / p)
    cos_err = res.err_est * (1.0 - w) ** (p - 1.0) * cos ** (1.0 - p) if cos > 0.0 else res.err_est
    return FuncValue(1.0 - w, res.err_est), FuncValue(cos, cos_err)


def _reduce(x: float, half_pi: float) -> tuple[float, float, float]:
    """Map x to r in [0, π_p/2] with the signs of sin_p(x) and cos_p(x)."""
    r = math.remainder(x, 4.0 * half_pi)
    sin_sign = 1.0
    if r < 0.0:
        r, sin_sign = -r, -1.0
    cos_sign = 1.0
    if r > half_pi:
        r, cos_sign = 2.0 * half_pi - r, -1.0
    return min(r, half_pi), sin_sign, cos_sign


# ============================================================================
# Public functions
# ============================================================================

def pi_p(p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> PiP:
    """π_p/2 = ∫₀¹ (1 - t^p)^(-1/p) dt; memoized per (p, cfg)."""
    p = as_pparam(p)
    half = _half_pi(p.p, cfg)
    return PiP(p, half.value, half.err_est)


def arcsin_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    Generalized arcsine on [-1, 1], odd extension of the defining integral.

    Raises:
        DomainError: |x| > 1
    """
    p = as_pparam(p)
    x = _require_finite(x)
    if abs(x) > 1.0:
        raise DomainError(f"arcsin_p requires |x| <= 1, got {x!r}")
    if x < 0.0:
        return -_arcsin_nonneg(-x, p.p, cfg)
    return _arcsin_nonneg(x, p.p, cfg)


def sin_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """Generalized sine on the real line."""
    p = as_pparam(p)
    x = _require_finite(x)
    r, sin_sign, _ = _reduce(x, _half_pi(p.p, cfg).value)
    sin, _ = _primary(r, p.p, cfg)
    return FuncValue(_signed(sin.value, sin_sign), sin.err_est)


def cos_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    Generalized cosine, the derivative of sin_p.

    |cos_p| = (1 - |sin_p|^p)^(1/p) with the sign of d/dx sin_p; exactly 0 at
    x = kπ_p + π_p/2.
    """
    p = as_pparam(p)
    x = _require_finite(x)
    r, _, cos_sign = _reduce(x, _half_pi(p.p, cfg).value)
    _, cos = _primary(r, p.p, cfg)
    return FuncValue(_signed(cos.value, cos_sign), cos.err_est)


def tan_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    Generalized tangent sin_p / cos_p.

    Raises:
        PoleError: x within POLE_TOL_FRACTION * π_p of kπ_p + π_p/2
    """
    p = as_pparam(p)
    x = _require_finite(x)
    half_pi = _half_pi(p.p, cfg).value
    r, sin_sign, cos_sign = _reduce(x, half_pi)
    if half_pi - r < POLE_TOL_FRACTION * 2.0 * half_pi:
        raise PoleError(f"tan_p has a pole at kπ_p + π_p/2; x={x!r} is within {POLE_TOL_FRACTION}·π_p of it")
    sin, cos = _primary(r, p.p, cfg)
    value = sin.value / cos.value
    rel_err = sin.err_est / sin.value + cos.err_est / cos.value if sin.value else 0.0
    return FuncValue(_signed(value, sin_sign * cos_sign), abs(value) * rel_err)


def arctan_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    Generalized arctangent ∫₀ˣ dt / (1 + t^p), odd in x.

    For |x| > 1 the improper remainder ∫ₓ^∞ is integrated after t = 1/s and
    subtracted from π_p/2.
    """
    p = as_pparam(p)
    x = _require_finite(x)
    ax = abs(x)
    if ax <= 1.0:
        res = integrate(functools.partial(_arctan_head_integrand, p=p.p), 0.0, ax, cfg)
    else:
        half_pi = _half_pi(p.p, cfg)
        rest = integrate(functools.partial(_arctan_tail_integrand, p=p.p), 0.0, 1.0 / ax, cfg)
        res = FuncValue(half_pi.value - rest.value, half_pi.err_est + rest.err_est)
    return -res if x < 0.0 else res


def d_cos_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    d/dx cos_p(x) = -cos_p(x)^(2-p) sin_p(x)^(p-1) on (0, π_p/2).

    Raises:
        DomainError: x outside (0, π_p/2)
    """
    p = as_pparam(p)
    x = _require_finite(x)
    half_pi = _half_pi(p.p, cfg).value
    if not 0.0 < x < half_pi:
        raise DomainError(f"d_cos_p requires 0 < x < π_p/2 = {half_pi!r}, got {x!r}")
    sin, cos = _primary(x, p.p, cfg)
    value = -(cos.value ** (2.0 - p.p)) * sin.value ** (p.p - 1.0)
    rel_err = abs(2.0 - p.p) * cos.err_est / cos.value + (p.p - 1.0) * sin.err_est / sin.value
    return FuncValue(value, abs(value) * rel_err)


def d_tan_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    d/dx tan_p(x) = 1 + |tan_p(x)|^p on (-π_p/2, π_p/2).

    Raises:
        DomainError: x outside (-π_p/2, π_p/2)
    """
    p = as_pparam(p)
    x = _require_finite(x)
    half_pi = _half_pi(p.p, cfg).value
    if not abs(x) < half_pi:
        raise DomainError(f"d_tan_p requires |x| < π_p/2 = {half_pi!r}, got {x!r}")
    tan = tan_p(x, p, cfg)
    magnitude = abs(tan.value) ** p.p
    err = p.p * magnitude / abs(tan.value) * tan.err_est if tan.value else 0.0
    return FuncValue(1.0 + magnitude, err)


# ============================================================================
# Cancellation-free forms for small arguments
# ============================================================================

def sin_ratio_deficit(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    1 - sin_p(x)/x on (0, π_p/2], with full relative accuracy as x -> 0.

    The deficit D = x - sin_p(x) solves E(x - D) = D with
    E(y) = arcsin_p(y) - y = ∫₀^y ((1 - t^p)^(-1/p) - 1) dt; starting from
    the directly computed difference, two Newton steps on that equation
    remove the cancellation.

    Raises:
        DomainError: x outside (0, π_p/2]
    """
    p = as_pparam(p)
    x = _require_finite(x)
    half_pi = _half_pi(p.p, cfg).value
    if not 0.0 < x <= half_pi:
        raise DomainError(f"sin_ratio_deficit requires 0 < x <= π_p/2 = {half_pi!r}, got {x!r}")
    sin, _ = _primary(x, p.p, cfg)
    if sin.value > HEAD_LIMIT:
        return FuncValue(1.0 - sin.value / x, sin.err_est / x)

    excess_integrand = functools.partial(_arcsin_excess_integrand, p=p.p)
    deficit = x - sin.value
    excess = FuncValue(deficit, sin.err_est)
    for _ in range(2):
        y = x - deficit
        excess = integrate(excess_integrand, 0.0, y, cfg)
        deficit += (excess.value - deficit) * (-math.expm1(p.p * math.log(y))) ** (1.0 / p.p)
    return FuncValue(deficit / x, excess.err_est / x)


def log_cos_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    log cos_p(x) on [0, π_p/2), relative accuracy kept as x -> 0.

    Raises:
        DomainError: x outside [0, π_p/2)
    """
    p = as_pparam(p)
    x = _require_finite(x)
    half_pi = _half_pi(p.p, cfg).value
    if not 0.0 <= x < half_pi:
        raise DomainError(f"log_cos_p requires 0 <= x < π_p/2 = {half_pi!r}, got {x!r}")
    sin, cos = _primary(x, p.p, cfg)
    if sin.value <= HEAD_LIMIT:
        value = math.log1p(-(sin.value ** p.p)) / p.p
    else:
        value = math.log(cos.value)
    return FuncValue(value, cos.err_est / cos.value)
