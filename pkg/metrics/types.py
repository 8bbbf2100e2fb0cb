"""Value types for confusion matrices and rate parametrizations."""

import math
from dataclasses import dataclass, field
from numbers import Integral

from utils.errors import DataError, DomainError


# Tolerance for probabilities summing to one and for open-interval checks
PROB_TOL = 1e-12


@dataclass(frozen=True)
class ConfusionCounts:
    """
    Integer 2x2 confusion table.

    Rows are the true label (1, 0), columns the predicted label (1, 0):
    n11 true positives, n10 false negatives, n01 false positives,
    n00 true negatives.
    """

    n11: int
    n10: int
    n01: int
    n00: int

    def __post_init__(self) -> None:
        for name in ("n11", "n10", "n01", "n00"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Integral):
                raise DataError(f"count {name} must be an integer, got {value!r}")
            if value < 0:
                raise DataError(f"count {name} must be nonnegative, got {value}")

    @property
    def positives(self) -> int:
        return self.n11 + self.n10

    @property
    def negatives(self) -> int:
        return self.n01 + self.n00

    @property
    def total(self) -> int:
        return self.positives + self.negatives


@dataclass(frozen=True)
class ConfusionRates:
    """Joint probabilities of true label and prediction, same layout as ConfusionCounts."""

    p11: float
    p10: float
    p01: float
    p00: float

    def __post_init__(self) -> None:
        values = (self.p11, self.p10, self.p01, self.p00)
        for value in values:
            if not (0.0 <= value <= 1.0):
                raise DataError(f"confusion rate {value!r} outside [0, 1]")
        if abs(math.fsum(values) - 1.0) > PROB_TOL:
            raise DataError(f"confusion rates sum to {math.fsum(values)!r}, not 1")


@dataclass(frozen=True)
class RateTriple:
    """
    (tpr, tnr, prev) parametrization of a classifier.

    fnr and fpr are the complements 1 - tpr and 1 - tnr. Rate models that can
    evaluate a tail probability directly pass it here, which keeps formulas
    that divide by a small false positive rate accurate when tnr rounds to 1.
    """

    tpr: float
    tnr: float
    prev: float
    fnr: float = field(default=None)  # type: ignore[assignment]
    fpr: float = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        for name in ("tpr", "tnr"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise DomainError(f"{name}={value!r} outside [0, 1]")
        if not (PROB_TOL < self.prev < 1.0 - PROB_TOL):
            raise DomainError(f"prev={self.prev!r} outside (0, 1)")

        if self.fnr is None:
            object.__setattr__(self, "fnr", 1.0 - self.tpr)
        if self.fpr is None:
            object.__setattr__(self, "fpr", 1.0 - self.tnr)
        for name in ("fnr", "fpr"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise DomainError(f"{name}={value!r} outside [0, 1]")

    @property
    def gamma(self) -> float:
        """Probability of a positive prediction."""
        return self.prev * self.tpr + (1.0 - self.prev) * self.fpr

    def is_interior(self, tol: float = PROB_TOL) -> bool:
        """Whether tpr and tnr lie strictly inside (0, 1) by more than tol."""
        return min(self.tpr, self.tnr, self.fnr, self.fpr) > tol


def precision_from_rates(tpr: float, fpr: float, prev: float) -> float | None:
    """Precision of a classifier with the given rates, None if nothing is predicted positive."""
    predicted = tpr * prev + fpr * (1.0 - prev)
    if predicted <= 0.0:
        return None
    return tpr * prev / predicted


@dataclass(frozen=True)
class CurvePoint:
    """
    Operating point on a ROC or recall-vs-(1-precision) curve.

    precision is None when the classifier predicts no positives.
    """

    threshold: float
    fpr: float
    tpr: float
    precision: float | None

    @property
    def one_minus_precision(self) -> float | None:
        if self.precision is None:
            return None
        return 1.0 - self.precision
