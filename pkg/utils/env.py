"""Environment-backed settings."""

import logging
import os


logger = logging.getLogger(__name__)


def env_int(name: str, default: int) -> int:
    """
    Read a positive integer from the environment.

    Args:
        name: Variable name
        default: Value used when the variable is unset or invalid

    Returns:
        The parsed value, or the default
    """
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", name, raw)
        return default
    if value < 1:
        logger.warning("Ignoring %s=%r: must be at least 1", name, raw)
        return default
    return value


def max_threads() -> int:
    """Worker thread cap for sweeps and simulation cells."""
    return env_int("IMBAMETRIC_THREADS", os.cpu_count() or 1)


def mc_samples() -> int:
    """Sample count for the Monte-Carlo quadrature fallback."""
    return env_int("IMBAMETRIC_MC_SAMPLES", 1_000_000)
