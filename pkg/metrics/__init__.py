from .core import (
    rates_from_counts,
    triple_from_rates,
    triple_from_counts,
    metric_value,
    derivative_ratio,
    partial_derivatives,
    robustness_bound,
    metric_range,
)
from .parsing import format_metric_spec, parse_metric_list, parse_metric_spec
from .specs import (
    Accuracy,
    WeightedAccuracy,
    BalancedAccuracy,
    Jaccard,
    FBeta,
    MCC,
    Kappa,
    YuleQ,
    YuleY,
    RobustF,
    RobustMCC,
    MetricSpec,
    ROBUST_FAMILIES,
    ASSOCIATION_FAMILIES,
)
from .types import (
    ConfusionCounts,
    ConfusionRates,
    CurvePoint,
    RateTriple,
    precision_from_rates,
)

__all__ = [
    "rates_from_counts",
    "triple_from_rates",
    "triple_from_counts",
    "metric_value",
    "derivative_ratio",
    "partial_derivatives",
    "robustness_bound",
    "metric_range",
    "format_metric_spec",
    "parse_metric_list",
    "parse_metric_spec",
    "Accuracy",
    "WeightedAccuracy",
    "BalancedAccuracy",
    "Jaccard",
    "FBeta",
    "MCC",
    "Kappa",
    "YuleQ",
    "YuleY",
    "RobustF",
    "RobustMCC",
    "MetricSpec",
    "ROBUST_FAMILIES",
    "ASSOCIATION_FAMILIES",
    "ConfusionCounts",
    "ConfusionRates",
    "CurvePoint",
    "RateTriple",
    "precision_from_rates",
]
