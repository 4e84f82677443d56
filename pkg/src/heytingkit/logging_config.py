"""Logging configuration for the heytingkit package."""

import logging
import sys
from typing import Optional

logger: logging.Logger = logging.getLogger("heytingkit")
logger.setLevel(logging.INFO)

# Reports go to stdout; diagnostics stay on stderr
console_handler = logging.StreamHandler(sys.stderr)
console_handler.setLevel(logging.INFO)

formatter = logging.Formatter(
    "%(asctime)s - %(levelname)s - %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
)
console_handler.setFormatter(formatter)

logger.addHandler(console_handler)
logger.propagate = False


def configure_logging(level: int = logging.INFO) -> None:
    """Set the package log level.

    Args:
        level: A ``logging`` level constant
    """
    logger.setLevel(level)
    console_handler.setLevel(level)


def enable_debug() -> None:
    """Enable debug logging."""
    configure_logging(logging.DEBUG)


def disable_debug() -> None:
    """Disable debug logging."""
    configure_logging(logging.INFO)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Get a logger instance.

    Args:
        name: Module name, typically ``__name__``. If None, returns the package logger.

    Returns:
        A child of the package logger
    """
    if not name:
        return logger
    if name == "heytingkit" or name.startswith("heytingkit."):
        return logging.getLogger(name)
    short = name.rsplit("heytingkit.", 1)[-1]
    return logging.getLogger(f"heytingkit.{short}")
