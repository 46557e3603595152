"""
Named-function registry.

Maps the names accepted on the command line onto the kernels in ptrig and
phyp, with a one-line description and whether the function takes an x.
"""

import logging
from dataclasses import dataclass
from typing import Callable

from . import phyp, ptrig
from .config import DEFAULT_EVAL, EvalConfig
from .errors import InvalidArgument
from .numerics import FuncValue
from .ptrig import PParam, as_pparam

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FunctionEntry:
    """One evaluable function: kernel(x, p, cfg) -> FuncValue."""

    name: str
    kernel: Callable[[float, PParam, EvalConfig], FuncValue]
    description: str
    needs_x: bool = True


def _pi_p(x: float, p: PParam, cfg: EvalConfig) -> FuncValue:
    res = ptrig.pi_p(p, cfg)
    return FuncValue(res.value, 2.0 * res.err_est)


# ============================================================================
# Function Registry
# ============================================================================

FUNCTIONS = {
    entry.name: entry
    for entry in (
        FunctionEntry("pi_p", _pi_p, "half-period π_p = 2 ∫₀¹ (1 - t^p)^(-1/p) dt", needs_x=False),
        FunctionEntry("sin_p", ptrig.sin_p, "generalized sine on ℝ"),
        FunctionEntry("cos_p", ptrig.cos_p, "generalized cosine, d/dx sin_p"),
        FunctionEntry("tan_p", ptrig.tan_p, "sin_p / cos_p, poles at kπ_p + π_p/2"),
        FunctionEntry("arcsin_p", ptrig.arcsin_p, "inverse of sin_p on [-1, 1]"),
        FunctionEntry("arctan_p", ptrig.arctan_p, "∫₀ˣ dt / (1 + t^p) on ℝ"),
        FunctionEntry("sinh_p", phyp.sinh_p, "generalized hyperbolic sine, |x| <= 50"),
        FunctionEntry("cosh_p", phyp.cosh_p, "generalized hyperbolic cosine, d/dx sinh_p"),
        FunctionEntry("tanh_p", phyp.tanh_p, "sinh_p / cosh_p"),
        FunctionEntry("arcsinh_p", phyp.arcsinh_p, "∫₀ˣ (1 + t^p)^(-1/p) dt on ℝ"),
        FunctionEntry("arctanh_p", phyp.arctanh_p, "∫₀ˣ dt / (1 - t^p) on (-1, 1)"),
        FunctionEntry("d_cos_p", ptrig.d_cos_p, "-cos_p^(2-p) sin_p^(p-1) on (0, π_p/2)"),
        FunctionEntry("d_tan_p", ptrig.d_tan_p, "1 + |tan_p|^p on (-π_p/2, π_p/2)"),
        FunctionEntry("d_cosh_p", phyp.d_cosh_p, "cosh_p^(2-p) sinh_p^(p-1) for x >= 0"),
        FunctionEntry("d_tanh_p", phyp.d_tanh_p, "1 - |tanh_p|^p"),
    )
}


def evaluate(name: str, p: PParam | float, x: float | None = None, cfg: EvalConfig = DEFAULT_EVAL) -> FuncValue:
    """
    Evaluate a registered function by name.

    Args:
        name: Key of FUNCTIONS
        p: Exponent
        x: Argument (ignored by pi_p, required otherwise)
        cfg: Tolerances

    Returns:
        FuncValue from the kernel

    Raises:
        InvalidArgument: Unknown name or missing x
        DomainError: Propagated from the kernel
    """
    entry = FUNCTIONS.get(name)
    if entry is None:
        raise InvalidArgument(f"unknown function {name!r}; choose one of {', '.join(FUNCTIONS)}")
    if entry.needs_x and x is None:
        raise InvalidArgument(f"{name} requires an x argument")
    p = as_pparam(p)
    result = entry.kernel(0.0 if x is None else x, p, cfg)
    logger.debug(f"{name}(x={x!r}, p={p.p!r}) = {result.value!r} ± {result.err_est:.2e}")
    return result
