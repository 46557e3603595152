"""
Exception hierarchy.

Every error raised by the numerical kernels, the inequality registry and the
scanners derives from GentrigError, so the CLI can map the whole family onto
exit code 2 with a single except clause.
"""


class GentrigError(Exception):
    """Base class for all library errors."""

    pass


class DomainError(GentrigError, ValueError):
    """Raised when an argument lies outside a function's domain."""

    pass


class PoleError(DomainError):
    """Raised when tan_p is evaluated too close to one of its poles."""

    pass


class InvalidInterval(DomainError):
    """Raised for reversed or non-finite integration/inversion intervals."""

    pass


class TargetOutOfRange(DomainError):
    """Raised when an inversion target is not bracketed by f(lo), f(hi)."""

    pass


class OverflowGuard(DomainError):
    """Raised when |x| exceeds the sinh_p argument cap."""

    pass


class NonConvergence(GentrigError):
    """
    Raised when an iterative scheme hits its cap above tolerance.

    Attributes:
        value: Last iterate or estimate
        err_est: Error estimate at that point
    """

    def __init__(self, message: str, value: float = float("nan"), err_est: float = float("inf")):
        super().__init__(message)
        self.value = value
        self.err_est = err_est


class NonFiniteIntegrand(GentrigError):
    """Raised when an integrand returns inf/nan at an interior node."""

    pass


class NonPositiveValue(GentrigError):
    """Raised by log-shape scans when a sample is not strictly positive."""

    pass


class InvalidArgument(GentrigError, ValueError):
    """Raised for malformed grids, counts and other caller mistakes."""

    pass


class UnknownCase(InvalidArgument, KeyError):
    """Raised when a registry id does not exist."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class EvaluationError(GentrigError):
    """
    Wraps a failure at one scan point with its location.

    Attributes:
        case_id: Registry id (or scan label) being evaluated
        p: Exponent at the failing point
        x: Abscissa (or t) at the failing point
    """

    def __init__(self, case_id: str, p: float, x: float, cause: Exception):
        super().__init__(f"{case_id}: evaluation failed at p={p!r}, x={x!r}: {cause}")
        self.case_id = case_id
        self.p = p
        self.x = x
        self.__cause__ = cause
