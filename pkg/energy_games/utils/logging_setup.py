"""Logging setup for the command line. Diagnostics always go to standard error."""
import logging
import sys
from typing import Union

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Union[str, int] = "WARNING") -> logging.Logger:
    """
    Installs a single stderr handler on the package logger.

    Args:
        level (Union[str, int]): Logging level name or number.

    Returns:
        logging.Logger: The configured "energy_games" logger.
    """
    logger = logging.getLogger("energy_games")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level.upper() if isinstance(level, str) else level)
    logger.propagate = False
    return logger
