"""Empirical ROC and recall-vs-(1-precision) curves."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.stats import rankdata

from metrics import ConfusionCounts, CurvePoint, MetricSpec

from .confusion import GridSpec, ThresholdSweepRow, confusion_at, counts_on_grid, grid_optimize
from .samples import Samples, ScoreSet, as_score_set


@dataclass(frozen=True)
class OptimalPoint:
    """Grid-optimal threshold of a metric and its position on both curves."""

    spec: MetricSpec
    row: ThresholdSweepRow
    point: CurvePoint

    @property
    def roc_coordinates(self) -> tuple[float, float]:
        """(fpr, tpr)"""
        return self.point.fpr, self.point.tpr

    @property
    def pr_coordinates(self) -> tuple[float | None, float]:
        """(1 - precision, tpr)"""
        return self.point.one_minus_precision, self.point.tpr


def _point(threshold: float, counts: ConfusionCounts) -> CurvePoint:
    predicted = counts.n11 + counts.n01
    return CurvePoint(
        threshold=threshold,
        fpr=counts.n01 / counts.negatives,
        tpr=counts.n11 / counts.positives,
        precision=counts.n11 / predicted if predicted else None,
    )


def curve_point_at(samples: Samples, tilde_delta: float) -> CurvePoint:
    """Curve coordinates of the classifier predicting 1 when score >= tilde_delta."""
    score_set = as_score_set(samples)
    score_set.require_both_labels()
    return _point(float(tilde_delta), confusion_at(score_set, tilde_delta))


def roc_curve(samples: Samples) -> list[CurvePoint]:
    """
    ROC staircase over all distinct score thresholds.

    Starts at (0, 0) with threshold +inf, followed by one point per distinct
    score in descending order; the lowest score gives (1, 1).
    """
    score_set = as_score_set(samples)
    score_set.require_both_labels()
    thresholds = np.unique(score_set.scores)[::-1]

    points = [CurvePoint(threshold=float("inf"), fpr=0.0, tpr=0.0, precision=None)]
    for threshold, counts in zip(thresholds, counts_on_grid(score_set, thresholds)):
        points.append(_point(float(threshold), counts))
    return points


def recall_vs_one_minus_precision(
    samples: Samples, include_undefined: bool = False
) -> list[CurvePoint]:
    """
    Points of the recall vs (1 - precision) curve, by threshold descending.

    Points without predicted positives have undefined precision and are
    dropped unless include_undefined is set.
    """
    points = roc_curve(samples)
    if include_undefined:
        return points
    return [p for p in points if p.precision is not None]


def roc_auc(samples: Samples) -> float:
    """Area under the ROC curve; tied scores count one half."""
    score_set = as_score_set(samples)
    score_set.require_both_labels()
    ranks = rankdata(score_set.scores)
    positive_rank_sum = float(np.sum(ranks[score_set.labels == 1]))
    p, n = score_set.positives, score_set.negatives
    return (positive_rank_sum - p * (p + 1) / 2.0) / (p * n)


def optimal_points(
    samples: Samples,
    specs: Sequence[MetricSpec],
    grid: GridSpec | None = None,
) -> list[OptimalPoint]:
    """Grid-optimal operating point of each metric, for overlay on the curves."""
    score_set: ScoreSet = as_score_set(samples)
    results = []
    for spec in specs:
        row = grid_optimize(score_set, spec, grid)
        results.append(
            OptimalPoint(spec=spec, row=row, point=curve_point_at(score_set, row.tilde_delta))
        )
    return results
