"""
Configuration management.

EvalConfig carries the numerical tolerances every evaluation runs under.
AppConfig is loaded from environment variables (and .env) and holds logging
settings, EvalConfig overrides and the scan worker count.
"""

import logging
import math
import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

# Valid log level names
LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


class ConfigError(Exception):
    """Raised when configuration is missing or invalid."""

    pass


@dataclass(frozen=True)
class EvalConfig:
    """
    Tolerances and iteration caps for quadrature and inversion.

    Frozen and hashable so that memo tables can key on it; two equal configs
    always produce bit-identical results.
    """

    rel_tol: float = 1e-13
    abs_tol: float = 1e-14
    max_quad_levels: int = 12
    max_iters: int = 100

    def __post_init__(self):
        errors = []
        if not (math.isfinite(self.rel_tol) and self.rel_tol > 0):
            errors.append(f"rel_tol must be > 0, got {self.rel_tol!r}")
        if not (math.isfinite(self.abs_tol) and self.abs_tol > 0):
            errors.append(f"abs_tol must be > 0, got {self.abs_tol!r}")
        if int(self.max_quad_levels) != self.max_quad_levels or self.max_quad_levels < 1:
            errors.append(f"max_quad_levels must be an integer >= 1, got {self.max_quad_levels!r}")
        if int(self.max_iters) != self.max_iters or self.max_iters < 1:
            errors.append(f"max_iters must be an integer >= 1, got {self.max_iters!r}")
        if errors:
            raise ConfigError("\n".join(errors))

    def tolerance(self, value: float) -> float:
        """Accepted error for a result of magnitude |value|."""
        return max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_EVAL = EvalConfig()


@dataclass
class AppConfig:
    """Application configuration."""

    log_level_app: int = logging.INFO
    log_level_deps: int = logging.WARNING
    log_to_console: bool = True
    log_file_path: str | None = None
    eval: EvalConfig = field(default_factory=EvalConfig)
    workers: int = 1


def _parse_number(name: str, cast, errors: list[str]):
    raw = os.getenv(name, "").strip()
    if not raw:
        return None
    try:
        return cast(raw)
    except ValueError:
        errors.append(f"{name} must be a number, got {raw!r}")
        return None


def load_config() -> AppConfig:
    """
    Load configuration from environment variables.

    Loads .env file if present, then validates every setting.

    Returns:
        AppConfig object with validated settings

    Raises:
        ConfigError: If any variable is malformed (all problems are reported together)
    """
    load_dotenv()

    errors = []

    # Parse log levels (default to INFO for app, WARNING for deps)
    log_level_app_str = os.getenv("LOG_LEVEL_APP", "").strip().upper()
    log_level_app = LOG_LEVELS.get(log_level_app_str, logging.INFO)
    if log_level_app_str and log_level_app_str not in LOG_LEVELS:
        errors.append(f"LOG_LEVEL_APP must be one of {', '.join(LOG_LEVELS)}")

    log_level_deps_str = os.getenv("LOG_LEVEL_DEPS", "").strip().upper()
    log_level_deps = LOG_LEVELS.get(log_level_deps_str, logging.WARNING)
    if log_level_deps_str and log_level_deps_str not in LOG_LEVELS:
        errors.append(f"LOG_LEVEL_DEPS must be one of {', '.join(LOG_LEVELS)}")

    # Parse boolean (default to True)
    log_to_console_str = os.getenv("LOG_TO_CONSOLE", "").strip().lower()
    log_to_console = log_to_console_str in ("true", "1", "yes", "on") if log_to_console_str else True

    log_file_path = os.getenv("LOG_FILE_PATH", "").strip() or None

    overrides = {
        "rel_tol": _parse_number("GENTRIG_REL_TOL", float, errors),
        "abs_tol": _parse_number("GENTRIG_ABS_TOL", float, errors),
        "max_quad_levels": _parse_number("GENTRIG_MAX_QUAD_LEVELS", int, errors),
        "max_iters": _parse_number("GENTRIG_MAX_ITERS", int, errors),
    }
    eval_config = None
    try:
        eval_config = EvalConfig(**{k: v for k, v in overrides.items() if v is not None})
    except ConfigError as e:
        errors.append(str(e))

    workers = _parse_number("GENTRIG_WORKERS", int, errors)
    if workers is not None and workers < 1:
        errors.append(f"GENTRIG_WORKERS must be >= 1, got {workers}")

    if errors:
        raise ConfigError("\n".join(errors))

    return AppConfig(
        log_level_app=log_level_app,
        log_level_deps=log_level_deps,
        log_to_console=log_to_console,
        log_file_path=log_file_path,
        eval=eval_config,
        workers=workers or 1,
    )
