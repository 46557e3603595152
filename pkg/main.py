"""Entry point for the gentrig command-line tool."""

import logging
import sys

from gentrig.cli import cli
from gentrig.config import ConfigError, load_config
from gentrig.logging_config import setup_logging

logger = logging.getLogger("gentrig")

if __name__ == "__main__":
    try:
        config = load_config()
    except ConfigError as e:
        print(f"Configuration error:\n{e}", file=sys.stderr)
        sys.exit(2)

    setup_logging(
        app_level=config.log_level_app,
        dep_level=config.log_level_deps,
        log_to_console=config.log_to_console,
        log_file_path=config.log_file_path,
    )

    # Log startup context
    logger.debug(
        f"Tolerances: rel={config.eval.rel_tol:g}, abs={config.eval.abs_tol:g}, "
        f"quad_levels={config.eval.max_quad_levels}, iters={config.eval.max_iters}, workers={config.workers}"
    )
    logger.debug(
        f"Log levels: app={logging.getLevelName(config.log_level_app)}, deps={logging.getLevelName(config.log_level_deps)}"
    )

    cli(obj=config)
