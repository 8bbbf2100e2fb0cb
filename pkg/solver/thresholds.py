"""Conversion between density-ratio and regression-function thresholds.

A classifier thresholding the regression function eta(x) = P(Y=1 | X=x) at
tilde is the same classifier as the one thresholding f1/f0 at delta, with
tilde = delta*p / (p*delta + 1 - p).
"""

import math

from utils.errors import DomainError


def _check_prev(prev: float) -> None:
    if not 0.0 < prev < 1.0:
        raise DomainError(f"prev={prev!r} outside (0, 1)")


def threshold_density_to_regression(delta: float, prev: float) -> float:
    """Regression threshold equivalent to the density-ratio threshold delta."""
    _check_prev(prev)
    if not (delta > 0.0 and math.isfinite(delta)):
        raise DomainError(f"delta={delta!r} must be positive and finite")
    return delta * prev / (prev * delta + 1.0 - prev)


def threshold_regression_to_density(tilde: float, prev: float) -> float:
    """Density-ratio threshold equivalent to the regression threshold tilde."""
    _check_prev(prev)
    if not 0.0 < tilde < 1.0:
        raise DomainError(f"tilde={tilde!r} outside (0, 1)")
    return (1.0 - prev) * tilde / (prev * (1.0 - tilde))
