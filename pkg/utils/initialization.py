"""Process initialization utilities."""

import os

from dotenv import load_dotenv

from .cli import configure_logging


def initialize(verbose: bool = False) -> None:
    """Load .env settings and configure logging."""
    load_dotenv()

    level = "DEBUG" if verbose else os.getenv("IMBAMETRIC_LOG_LEVEL", "WARNING")
    configure_logging(level.upper())
