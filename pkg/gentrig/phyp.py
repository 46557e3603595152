"""
Generalized hyperbolic functions.

arcsinh_p(x) = ∫₀ˣ (1 + t^p)^(-1/p) dt (odd), sinh_p its inverse,
cosh_p = d/dx sinh_p with cosh_p^p - |sinh_p|^p = 1, tanh_p = sinh_p / cosh_p
and arctanh_p(x) = ∫₀ˣ dt / (1 - t^p) on (-1, 1).
"""

import functools
import logging
import math

import numpy as np

from .config import DEFAULT_EVAL, EvalConfig
from .errors import DomainError, NonConvergence, OverflowGuard
from .numerics import FuncValue, integrate, invert_monotone
from .ptrig import PParam, _require_finite, _signed, as_pparam

logger = logging.getLogger(__name__)

# sinh_p grows like e^x; arguments beyond this are refused
SINH_ARG_CAP = 50.0

# arctanh_p refuses |x| this close to 1
ARCTANH_EDGE = 1e-12

_CACHE_SIZE = 1 << 16


# ============================================================================
# Integrands (vectorized)
# ============================================================================

def _arcsinh_head_integrand(t: np.ndarray, p: float) -> np.ndarray:
    return np.exp(-np.log1p(t ** p) / p)


def _arcsinh_log_integrand(s: np.ndarray, p: float) -> np.ndarray:
    # ∫₁ˣ (1 + t^p)^(-1/p) dt after t = e^s
    return np.exp(-np.log1p(np.exp(-p * s)) / p)


def _arcsinh_deficit_integrand(t: np.ndarray, p: float) -> np.ndarray:
    # 1 - (1 + t^p)^(-1/p) without cancellation
    return -np.expm1(-np.log1p(t ** p) / p)


def _arctanh_integrand(t: np.ndarray, da: np.ndarray, db: np.ndarray, p: float, gap: float) -> np.ndarray:
    # 1 / (1 - t^p); near t = 1 the distance 1 - t = gap + db is exact
    near_one = gap + db
    low = -np.expm1(p * np.log(t))
    high = -np.expm1(p * np.log1p(-near_one))
    return 1.0 / np.where(t < 0.5, low, high)


# ============================================================================
# Kernels on x >= 0
# ============================================================================

def _arcsinh_nonneg(x: float, p: float, cfg: EvalConfig) -> FuncValue:
    if x <= 1.0:
        return integrate(functools.partial(_arcsinh_head_integrand, p=p), 0.0, x, cfg)
    head = _arcsinh_unit(p, cfg)
    rest = integrate(functools.partial(_arcsinh_log_integrand, p=p), 0.0, math.log(x), cfg)
    return FuncValue(head.value + rest.value, head.err_est + rest.err_est)


@functools.lru_cache(maxsize=256)
def _arcsinh_unit(p: float, cfg: EvalConfig) -> FuncValue:
    return integrate(functools.partial(_arcsinh_head_integrand, p=p), 0.0, 1.0, cfg)


def _arcsinh_slope(y: float, p: float) -> float:
    return math.exp(-math.log1p(y ** p) / p) if y <= 1.0 else math.exp(-math.log1p(y ** -p) / p) / y


@functools.lru_cache(maxsize=_CACHE_SIZE)
def _sinh_nonneg(x: float, p: float, cfg: EvalConfig) -> FuncValue:
    """sinh_p(x) for 0 <= x <= SINH_ARG_CAP by bracketed inversion."""
    if x == 0.0:
        return FuncValue(0.0)

    def f(y: float) -> float:
        return _arcsinh_nonneg(y, p, cfg).value

    # Grow the bracket until arcsinh_p(hi) >= x
    lo, hi = 0.0, max(1.0, x)
    for _ in range(cfg.max_iters):
        if f(hi) >= x:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise NonConvergence(f"sinh_p bracket did not reach x={x!r} in {cfg.max_iters} doublings", value=hi)
    logger.debug(f"sinh_p bracket for x={x!r}, p={p!r}: [{lo!r}, {hi!r}]")

    return invert_monotone(f, x, lo, hi, lambda y: _arcsinh_slope(y, p), cfg, guess=min(x, 0.5 * (lo + hi)))


def _cosh_from_sinh(s: float, p: float) -> float:
    # (1 + s^p)^(1/p) for s >= 0 without overflow
    if s <= 1.0:
        return math.exp(math.log1p(s ** p) / p)
    return s * math.exp(math.log1p(s ** -p) / p)


def _log_cosh_from_sinh(s: float, p: float) -> float:
    if s <= 1.0:
        return math.log1p(s ** p) / p
    return math.log(s) + math.log1p(s ** -p) / p


def _checked_sinh(x: float, p: PParam, cfg: EvalConfig) -> tuple[FuncValue, float]:
    if abs(x) > SINH_ARG_CAP:
        raise OverflowGuard(f"|x| must not exceed {SINH_ARG_CAP} for sinh_p, got {x!r}")
    return _sinh_nonneg(abs(x), p.p, cfg), math.copysign(1.0, x)


# ============================================================================
# Public functions
# ============================================================================

def arcsinh_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """Generalized inverse hyperbolic sine on the real line (odd)."""
    p = as_pparam(p)
    x = _require_finite(x)
    res = _arcsinh_nonneg(abs(x), p.p, cfg)
    return -res if x < 0.0 else res


def sinh_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    Generalized hyperbolic sine, the inverse of arcsinh_p.

    Raises:
        OverflowGuard: |x| > SINH_ARG_CAP
    """
    p = as_pparam(p)
    x = _require_finite(x)
    res, sign = _checked_sinh(x, p, cfg)
    return FuncValue(_signed(res.value, sign), res.err_est)


def cosh_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """Generalized hyperbolic cosine (1 + |sinh_p|^p)^(1/p); even, >= 1."""
    p = as_pparam(p)
    x = _require_finite(x)
    res, _ = _checked_sinh(x, p, cfg)
    s = res.value
    value = _cosh_from_sinh(s, p.p)
    # d cosh / d sinh = (s / cosh)^(p-1)
    err = res.err_est * (s / value) ** (p.p - 1.0) if s else 0.0
    return FuncValue(value, err)


def tanh_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """Generalized hyperbolic tangent sinh_p / cosh_p; odd, |tanh_p| < 1."""
    p = as_pparam(p)
    x = _require_finite(x)
    res, sign = _checked_sinh(x, p, cfg)
    s = res.value
    cosh = _cosh_from_sinh(s, p.p)
    # d tanh / d sinh = cosh^(-1-p)
    return FuncValue(_signed(s / cosh, sign), res.err_est * cosh ** (-1.0 - p.p))


def arctanh_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    Generalized inverse hyperbolic tangent ∫₀ˣ dt / (1 - t^p) on (-1, 1).

    Raises:
        DomainError: |x| >= 1 - ARCTANH_EDGE
    """
    p = as_pparam(p)
    x = _require_finite(x)
    ax = abs(x)
    if ax >= 1.0 - ARCTANH_EDGE:
        raise DomainError(f"arctanh_p requires |x| < 1 - {ARCTANH_EDGE}, got {x!r}")
    integrand = functools.partial(_arctanh_integrand, p=p.p, gap=1.0 - ax)
    res = integrate(integrand, 0.0, ax, cfg, endpoint_distances=True)
    return -res if x < 0.0 else res


def d_cosh_p(
    x: float,
    p: PParam | float,
    cfg: EvalConfig = DEFAULT_EVAL,
    *,
    extend_even: bool = False,
) -> FuncValue:
    """
    d/dx cosh_p(x) = cosh_p(x)^(2-p) sinh_p(x)^(p-1) for x >= 0.

    With extend_even, negative x returns the negated value at |x| (the
    derivative of the even extension).

    Raises:
        DomainError: x < 0 without extend_even
    """
    p = as_pparam(p)
    x = _require_finite(x)
    if x < 0.0 and not extend_even:
        raise DomainError(f"d_cosh_p requires x >= 0, got {x!r}")
    res, sign = _checked_sinh(x, p, cfg)
    s = res.value
    cosh = _cosh_from_sinh(s, p.p)
    value = cosh ** (2.0 - p.p) * s ** (p.p - 1.0)
    err = value * (p.p - 1.0) * res.err_est / s if s else 0.0
    return FuncValue(_signed(value, sign), err)


def d_tanh_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """d/dx tanh_p(x) = 1 - |tanh_p(x)|^p = cosh_p(x)^(-p), in (0, 1]."""
    p = as_pparam(p)
    x = _require_finite(x)
    res, _ = _checked_sinh(x, p, cfg)
    s = res.value
    value = math.exp(-p.p * _log_cosh_from_sinh(s, p.p))
    err = p.p * value * (s / _cosh_from_sinh(s, p.p)) ** (p.p - 1.0) * res.err_est
    return FuncValue(value, err)


# ============================================================================
# Cancellation-free forms for small arguments
# ============================================================================

def sinh_ratio_excess(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    sinh_p(x)/x - 1 for x > 0, with full relative accuracy as x -> 0.

    G = sinh_p(x) - x solves F(x + G) = G with
    F(y) = y - arcsinh_p(y) = ∫₀^y (1 - (1 + t^p)^(-1/p)) dt; two Newton
    steps from the direct difference remove the cancellation.

    Raises:
        DomainError: x <= 0
        OverflowGuard: x > SINH_ARG_CAP
    """
    p = as_pparam(p)
    x = _require_finite(x)
    if x <= 0.0:
        raise DomainError(f"sinh_ratio_excess requires x > 0, got {x!r}")
    res, _ = _checked_sinh(x, p, cfg)
    if res.value > 1.0:
        return FuncValue(res.value / x - 1.0, res.err_est / x)

    deficit_integrand = functools.partial(_arcsinh_deficit_integrand, p=p.p)
    excess = res.value - x
    deficit = FuncValue(excess, res.err_est)
    for _ in range(2):
        y = x + excess
        deficit = integrate(deficit_integrand, 0.0, y, cfg)
        excess += (deficit.value - excess) * math.exp(math.log1p(y ** p.p) / p.p)
    return FuncValue(excess / x, deficit.err_est / x)


def log_cosh_p(x: float, p: PParam | float, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """log cosh_p(x) = log1p(|sinh_p(x)|^p) / p, accurate as x -> 0."""
    p = as_pparam(p)
    x = _require_finite(x)
    res, _ = _checked_sinh(x, p, cfg)
    s = res.value
    value = _log_cosh_from_sinh(s, p.p)
    err = res.err_est * (s / _cosh_from_sinh(s, p.p)) ** p.p / s if s else 0.0
    return FuncValue(value, err)
