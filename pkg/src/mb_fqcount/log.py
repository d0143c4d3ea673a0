"""Logging configuration for mb-fqcount."""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

LOGGER_NAME = "mb_fqcount"
_FORMAT = "%(asctime)s %(levelname)-8s %(processName)s %(name)s: %(message)s"


def setup_logging(log_path: Path, *, verbose: bool = False) -> None:
    """Send package logs to a rotating file, and INFO and above to stderr when ``verbose``.

    Stdout is reserved for reports, so no handler ever writes there. Repeated calls leave the existing
    handlers in place.
    """
    logger = logging.getLogger(LOGGER_NAME)
    if logger.handlers:
        return

    file_handler = RotatingFileHandler(log_path, maxBytes=1_000_000, backupCount=3)
    file_handler.setFormatter(logging.Formatter(fmt=_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
    logger.addHandler(file_handler)

    if verbose:
        stderr_handler = logging.StreamHandler(sys.stderr)
        stderr_handler.setLevel(logging.INFO)
        stderr_handler.setFormatter(logging.Formatter(fmt="%(levelname)s %(message)s"))
        logger.addHandler(stderr_handler)

    logger.setLevel(logging.DEBUG)
