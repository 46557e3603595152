"""
Shared numerical kernels.

Double-exponential (tanh-sinh) quadrature for integrands with integrable
endpoint singularities, and bracketed Newton iteration for inverting
strictly monotone functions.

Integrands are vectorized: they receive numpy arrays of abscissae and must
return arrays (or scalars) of the same shape.
"""

import functools
import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .config import DEFAULT_EVAL, EvalConfig
from .errors import InvalidInterval, NonConvergence, NonFiniteIntegrand, TargetOutOfRange

logger = logging.getLogger(__name__)

# Largest |v| of the tanh-sinh map. At v = 6 the distance from the nearest
# endpoint is ~1e-275, still a normal double.
_V_MAX = 6.0

# Levels always computed before the difference test may declare convergence.
_MIN_LEVEL = 3


@dataclass(frozen=True)
class FuncValue:
    """
    A computed real value with an a-posteriori error estimate.

    err_est is an estimate (difference of refinement levels, last iteration
    step, or first-order propagation of those), not a rigorous bound.
    """

    value: float
    err_est: float = 0.0

    def __post_init__(self):
        if not self.err_est >= 0:
            raise ValueError(f"err_est must be >= 0, got {self.err_est!r}")

    def __float__(self) -> float:
        return self.value

    def __neg__(self) -> "FuncValue":
        return FuncValue(-self.value, self.err_est)


# ============================================================================
# Quadrature
# ============================================================================

@functools.cache
def _tanh_sinh_level(level: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Nodes added at one refinement level on the reference interval (-1, 1).

    Level 0 holds every integer multiple of h = 1 in [-V_MAX, V_MAX]; level
    k > 0 holds the odd multiples of h = 2**-k, i.e. only the new nodes.

    Returns:
        (1 + u, 1 - u, h * du/dv) for each node u = tanh(pi/2 sinh v); the two
        endpoint distances are computed directly, never as differences.
    """
    h = 2.0 ** -level
    n = int(_V_MAX / h)
    j = np.arange(-n, n + 1)
    if level > 0:
        j = j[j % 2 != 0]
    v = j * h
    s = 0.5 * np.pi * np.sinh(v)
    left = 2.0 / (1.0 + np.exp(-2.0 * s))
    right = 2.0 / (1.0 + np.exp(2.0 * s))
    weight = h * 0.5 * np.pi * np.cosh(v) / np.cosh(s) ** 2
    for arr in (left, right, weight):
        arr.setflags(write=False)
    return left, right, weight


def _level_sum(
    integrand: Callable,
    a: float,
    b: float,
    level: int,
    endpoint_distances: bool,
) -> float:
    half = 0.5 * (b - a)
    left, right, weight = _tanh_sinh_level(level)
    da = half * left
    db = half * right
    t = np.where(left <= right, a + da, b - db)
    if endpoint_distances:
        keep = (da > 0.0) & (db > 0.0)
    else:
        # Nodes that round onto an endpoint are dropped; a singular endpoint
        # is never sampled.
        keep = (t > a) & (t < b)
    t, da, db, w = t[keep], da[keep], db[keep], weight[keep]

    with np.errstate(all="ignore"):
        if endpoint_distances:
            fx = integrand(t, da, db)
        else:
            fx = integrand(t)
    fx = np.broadcast_to(np.asarray(fx, dtype=float), t.shape)

    finite = np.isfinite(fx)
    if not finite.all():
        bad = float(t[~finite][0])
        raise NonFiniteIntegrand(f"integrand is not finite at interior node t={bad!r} of [{a!r}, {b!r}]")
    return half * math.fsum(w * fx)


def integrate(
    integrand: Callable,
    a: float,
    b: float,
    cfg: EvalConfig = DEFAULT_EVAL,
    *,
    endpoint_distances: bool = False,
) -> FuncValue:
    """
    Integrate over [a, b] with tanh-sinh quadrature.

    Each level halves the step of the previous one and reuses its sum. The
    error estimate is the difference of the last two levels; convergence
    requires err <= max(abs_tol, rel_tol * |value|).

    A plain f(t) only sees abscissae, and near a nonzero endpoint those
    collapse onto its last few doubles. A singularity of order α at such an
    end keeps about ulp^(1 - α) / (1 - α) of its mass in the last ulp, so
    f(t) cannot resolve it; such integrands take endpoint_distances=True and
    receive t - a and b - t computed from the node map, accurate down to 1e-275.

    Args:
        integrand: Vectorized f(t), or f(t, t - a, b - t) when
            endpoint_distances is set
        a: Lower limit
        b: Upper limit (a <= b)
        cfg: Tolerances and level cap
        endpoint_distances: Pass exact endpoint distances to the integrand

    Returns:
        FuncValue with the integral and its estimated error.

    Raises:
        InvalidInterval: a > b or a non-finite limit
        NonConvergence: level cap reached above tolerance
        NonFiniteIntegrand: inf/nan at an interior node
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise InvalidInterval(f"integration limits must be finite, got [{a!r}, {b!r}]")
    if a > b:
        raise InvalidInterval(f"integration requires a <= b, got [{a!r}, {b!r}]")
    if a == b:
        return FuncValue(0.0, 0.0)

    estimate = _level_sum(integrand, a, b, 0, endpoint_distances)
    err = math.inf
    for level in range(1, cfg.max_quad_levels + 1):
        previous = estimate
        estimate = 0.5 * previous + _level_sum(integrand, a, b, level, endpoint_distances)
        err = abs(estimate - previous)
        if level >= _MIN_LEVEL and err <= cfg.tolerance(estimate):
            return FuncValue(estimate, err)

    logger.warning(f"Quadrature on [{a!r}, {b!r}] stopped at level {cfg.max_quad_levels} with err {err:.3e}")
    message = f"quadrature on [{a!r}, {b!r}] did not converge in {cfg.max_quad_levels} levels (err {err:.3e})"
    rounded = [end for end in (a, b) if end != 0.0]
    if not endpoint_distances and rounded:
        ends = " and ".join(repr(end) for end in rounded)
        message += (
            f"; nodes within one ulp of {ends} round onto the endpoint, so a singularity there "
            "needs endpoint_distances=True"
        )
    raise NonConvergence(message, value=estimate, err_est=err)


# ============================================================================
# Inversion
# ============================================================================

def invert_monotone(
    f: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    dfdx: Callable[[float], float] | None = None,
    cfg: EvalConfig = DEFAULT_EVAL,
    *,
    guess: float | None = None,
) -> FuncValue:
    """
    Solve f(y) = target for y in [lo, hi], f strictly monotone.

    Newton steps (with dfdx) or secant steps (without) are taken only when
    they land strictly inside the current bracket and shrink fast enough;
    otherwise the bracket is bisected. f is never evaluated outside [lo, hi].

    Args:
        f: Strictly monotone scalar function
        target: Value to invert
        lo: Left end of the bracket
        hi: Right end of the bracket
        dfdx: Optional derivative of f
        cfg: Tolerances and iteration cap
        guess: Optional starting point inside (lo, hi)

    Returns:
        FuncValue with the root; err_est is the size of the last step.

    Raises:
        InvalidInterval: lo > hi or non-finite limits
        TargetOutOfRange: target not between f(lo) and f(hi)
        NonConvergence: max_iters reached
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise InvalidInterval(f"inversion bracket must be finite with lo <= hi, got [{lo!r}, {hi!r}]")

    f_lo, f_hi = f(lo), f(hi)
    sign = 1.0 if f_hi >= f_lo else -1.0
    if not (sign * (f_lo - target) <= 0.0 <= sign * (f_hi - target)):
        raise TargetOutOfRange(f"target {target!r} not within [f({lo!r}), f({hi!r})] = [{f_lo!r}, {f_hi!r}]")
    if f_lo == target:
        return FuncValue(lo, 0.0)
    if f_hi == target:
        return FuncValue(hi, 0.0)

    # Residual g(y) = sign * (f(y) - target) is increasing with g(a) < 0 < g(b)
    a, b = lo, hi
    y = guess if guess is not None and lo < guess < hi else 0.5 * (lo + hi)
    step_old = step = hi - lo
    y_prev = g_prev = None

    for _ in range(cfg.max_iters):
        g = sign * (f(y) - target)
        if g == 0.0:
            return FuncValue(y, 0.0)
        if g < 0.0:
            a = y
        else:
            b = y

        candidate = None
        if dfdx is not None:
            slope = sign * dfdx(y)
            if math.isfinite(slope) and slope > 0.0:
                candidate = y - g / slope
        elif y_prev is not None and g != g_prev:
            candidate = y - g * (y - y_prev) / (g - g_prev)
        y_prev, g_prev = y, g

        if candidate is not None and a < candidate < b and abs(candidate - y) <= 0.5 * abs(step_old):
            step_old, step = step, candidate - y
            y = candidate
        else:
            step_old = step
            midpoint = 0.5 * (a + b)
            step = midpoint - y
            y = midpoint

        tol = cfg.tolerance(y)
        if abs(step) <= tol or b - a <= tol:
            return FuncValue(y, abs(step))

    logger.warning(f"Inversion for target {target!r} on [{lo!r}, {hi!r}] hit {cfg.max_iters} iterations")
    raise NonConvergence(
        f"inversion for target {target!r} did not converge in {cfg.max_iters} iterations",
        value=y,
        err_est=b - a,
    )
