"""Confusion matrices and grid optimization of regression thresholds."""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from metrics import (
    ConfusionCounts,
    MetricSpec,
    RateTriple,
    metric_value,
    triple_from_counts,
)
from solver import threshold_regression_to_density
from utils.errors import DegenerateMetricError, NumericError, UsageError

from .samples import Samples, ScoreSet, as_score_set


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridSpec:
    """Regression thresholds start, start + step, ..., up to stop."""

    start: float = 0.001
    stop: float = 0.999
    step: float = 0.001

    def __post_init__(self) -> None:
        if not (0.0 < self.start <= self.stop < 1.0):
            raise UsageError("grid must satisfy 0 < start <= stop < 1")
        if not self.step > 0.0:
            raise UsageError("grid step must be positive")

    def values(self) -> np.ndarray:
        count = math.floor((self.stop - self.start) / self.step + 1e-9) + 1
        # Rounded so 0.001 + 299 * 0.001 prints as 0.3
        return np.round(self.start + self.step * np.arange(count), 12)


@dataclass(frozen=True)
class ThresholdSweepRow:
    """Metric at one regression threshold, with the equivalent density-ratio threshold."""

    spec: MetricSpec
    tilde_delta: float
    metric_value: float
    tpr: float
    tnr: float
    delta_density: float

    @property
    def metric(self) -> str:
        return self.spec.label


def _predicted_positive(sorted_scores: np.ndarray, thresholds: np.ndarray) -> np.ndarray:
    """Count of scores >= each threshold."""
    return sorted_scores.size - np.searchsorted(sorted_scores, thresholds, side="left")


def counts_on_grid(score_set: ScoreSet, thresholds: Sequence[float]) -> list[ConfusionCounts]:
    """Confusion counts at each threshold, classifying score >= threshold as positive."""
    thresholds = np.asarray(thresholds, dtype=float)
    n11 = _predicted_positive(score_set.positive_scores, thresholds)
    n01 = _predicted_positive(score_set.negative_scores, thresholds)
    return [
        ConfusionCounts(
            n11=int(tp),
            n10=score_set.positives - int(tp),
            n01=int(fp),
            n00=score_set.negatives - int(fp),
        )
        for tp, fp in zip(n11, n01)
    ]


def confusion_at(samples: Samples, tilde_delta: float) -> ConfusionCounts:
    """
    Confusion counts of the classifier predicting 1 when score >= tilde_delta.

    Args:
        samples: Scored samples
        tilde_delta: Regression-function threshold
    """
    return counts_on_grid(as_score_set(samples), [tilde_delta])[0]


def _row(
    spec: MetricSpec, tilde: float, counts: ConfusionCounts, prevalence: float
) -> ThresholdSweepRow:
    triple: RateTriple = triple_from_counts(counts)
    return ThresholdSweepRow(
        spec=spec,
        tilde_delta=float(tilde),
        metric_value=metric_value(spec, triple),
        tpr=triple.tpr,
        tnr=triple.tnr,
        delta_density=threshold_regression_to_density(float(tilde), prevalence),
    )


def sweep_table(
    samples: Samples, spec: MetricSpec, grid: GridSpec | None = None
) -> list[ThresholdSweepRow]:
    """Rows for every grid threshold where the metric is defined, by threshold ascending."""
    score_set = as_score_set(samples)
    score_set.require_both_labels()
    thresholds = (grid or GridSpec()).values()

    rows = []
    for tilde, counts in zip(thresholds, counts_on_grid(score_set, thresholds)):
        try:
            rows.append(_row(spec, tilde, counts, score_set.prevalence))
        except DegenerateMetricError:
            logger.debug("%s undefined at threshold %g", spec.label, tilde)
    return rows


def grid_optimize(
    samples: Samples, spec: MetricSpec, grid: GridSpec | None = None
) -> ThresholdSweepRow:
    """
    Regression threshold on the grid that maximizes the empirical metric.

    Ties go to the smallest threshold. Thresholds where the metric is
    undefined are skipped.

    Raises:
        UndefinedRateError: If the samples lack one of the labels
        NumericError: If the metric is undefined at every grid point
    """
    best: ThresholdSweepRow | None = None
    for row in sweep_table(samples, spec, grid):
        if best is None or row.metric_value > best.metric_value:
            best = row
    if best is None:
        raise NumericError(f"degenerate metric input: {spec.label} undefined on the whole grid")
    return best
