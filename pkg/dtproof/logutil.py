from __future__ import annotations

import logging
from pathlib import Path

from .const import PACKAGE

TRACE = logging.DEBUG - 1
logging.addLevelName(TRACE, "TRACE")


def get_logger(file: str) -> logging.Logger:
    return logging.getLogger(f"{PACKAGE}.{Path(file).stem}")


def configure(verbosity: int = 0, level: str | None = None) -> None:
    """Install a stderr handler for command-line runs."""
    if level is None:
        level = ("WARNING", "INFO", "DEBUG", "TRACE")[min(verbosity, 3)]
    logging.basicConfig(
        level=TRACE if level == "TRACE" else getattr(logging, level),
        format="%(levelname)s %(name)s: %(message)s",
    )
