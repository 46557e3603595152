"""
Central logging configuration.

Configures separate log levels for gentrig modules vs dependencies. Logs go
to stderr (and optionally a file) so stdout stays reserved for values, CSV
and summary lines.
"""

import logging
import sys
from pathlib import Path

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
LOG_DATE_FORMAT = "%H:%M:%S"

_HANDLER_MARK = "_gentrig_handler"


def setup_logging(
    app_level: int = logging.INFO,
    dep_level: int = logging.WARNING,
    log_to_console: bool = True,
    log_file_path: str | None = None,
) -> None:
    """
    Configure logging with separate levels for app vs dependencies.

    Safe to call more than once (handlers installed by an earlier call are
    replaced, not duplicated).

    Args:
        app_level: Log level for gentrig modules (default: INFO)
        dep_level: Log level for dependencies (default: WARNING)
        log_to_console: Whether to log to stderr (default: True)
        log_file_path: Path to log file, or None to disable file logging
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, _HANDLER_MARK, False):
            root.removeHandler(handler)
            handler.close()

    # Handlers set to lowest level - loggers control filtering
    handler_level = min(app_level, dep_level)

    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

    # Console handler
    if log_to_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(handler_level)
        console_handler.setFormatter(formatter)
        setattr(console_handler, _HANDLER_MARK, True)
        root.addHandler(console_handler)

    # File handler
    if log_file_path:
        log_path = Path(log_file_path)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_path)
        file_handler.setLevel(handler_level)
        file_handler.setFormatter(formatter)
        setattr(file_handler, _HANDLER_MARK, True)
        root.addHandler(file_handler)

    # Root logger controls dependency log level
    root.setLevel(dep_level)

    # App logger covers all gentrig.* modules
    logging.getLogger("gentrig").setLevel(app_level)
