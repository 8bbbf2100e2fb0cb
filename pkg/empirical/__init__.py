from .confusion import (
    GridSpec,
    ThresholdSweepRow,
    confusion_at,
    counts_on_grid,
    grid_optimize,
    sweep_table,
)
from .curves import (
    OptimalPoint,
    curve_point_at,
    optimal_points,
    recall_vs_one_minus_precision,
    roc_auc,
    roc_curve,
)
from .samples import ScoredSample, ScoreSet, as_score_set, load_scores

__all__ = [
    "GridSpec",
    "ThresholdSweepRow",
    "confusion_at",
    "counts_on_grid",
    "grid_optimize",
    "sweep_table",
    "OptimalPoint",
    "curve_point_at",
    "optimal_points",
    "recall_vs_one_minus_precision",
    "roc_auc",
    "roc_curve",
    "ScoredSample",
    "ScoreSet",
    "as_score_set",
    "load_scores",
]
