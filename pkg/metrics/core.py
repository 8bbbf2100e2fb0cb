"""Metric values, derivative ratios and robustness bounds.

All formulas are written in the (tpr, tnr, prev) parametrization with the
shorthand t = tpr, s = tnr, p = prev, fnr = 1 - t, fpr = 1 - s and
gamma = p*t + (1 - p)*fpr, the probability of a positive prediction.
"""

import math
from typing import Callable

from utils.errors import (
    BoundaryDerivativeError,
    DegenerateMetricError,
    EmptyConfusionError,
    UndefinedRateError,
)

from .specs import (
    MCC,
    Accuracy,
    BalancedAccuracy,
    FBeta,
    Jaccard,
    Kappa,
    MetricSpec,
    RobustF,
    RobustMCC,
    SIGNED_FAMILIES,
    WeightedAccuracy,
    YuleQ,
    YuleY,
)
from .types import PROB_TOL, ConfusionCounts, ConfusionRates, RateTriple


def _div(numerator: float, denominator: float) -> float:
    """Divide, refusing zero or non-finite denominators."""
    if denominator == 0.0 or not math.isfinite(denominator):
        raise DegenerateMetricError()
    result = numerator / denominator
    if not math.isfinite(result):
        raise DegenerateMetricError()
    return result


# ------------------------------------------------------------------
# Conversions
# ------------------------------------------------------------------


def rates_from_counts(c: ConfusionCounts) -> ConfusionRates:
    """
    Convert counts to joint probabilities.

    Raises:
        EmptyConfusionError: If the table has no observations
    """
    total = c.total
    if total == 0:
        raise EmptyConfusionError()
    return ConfusionRates(
        p11=c.n11 / total,
        p10=c.n10 / total,
        p01=c.n01 / total,
        p00=c.n00 / total,
    )


def triple_from_rates(r: ConfusionRates) -> RateTriple:
    """
    Convert joint probabilities to the (tpr, tnr, prev) triple.

    Raises:
        UndefinedRateError: If either true class has zero probability
    """
    positives = r.p11 + r.p10
    negatives = r.p01 + r.p00
    if positives <= 0.0 or negatives <= 0.0:
        raise UndefinedRateError()
    return RateTriple(
        tpr=r.p11 / positives,
        tnr=r.p00 / negatives,
        prev=positives,
        fnr=r.p10 / positives,
        fpr=r.p01 / negatives,
    )


def triple_from_counts(c: ConfusionCounts) -> RateTriple:
    """Convert counts directly to a rate triple, with exact complements."""
    if c.total == 0:
        raise EmptyConfusionError()
    if c.positives == 0 or c.negatives == 0:
        raise UndefinedRateError()
    return RateTriple(
        tpr=c.n11 / c.positives,
        tnr=c.n00 / c.negatives,
        prev=c.positives / c.total,
        fnr=c.n10 / c.positives,
        fpr=c.n01 / c.negatives,
    )


# ------------------------------------------------------------------
# Metric values
# ------------------------------------------------------------------


def _accuracy(spec: Accuracy, r: RateTriple) -> float:
    return r.prev * r.tpr + (1.0 - r.prev) * r.tnr


def _weighted_accuracy(spec: WeightedAccuracy, r: RateTriple) -> float:
    return spec.w * r.prev * r.tpr + (1.0 - spec.w) * (1.0 - r.prev) * r.tnr


def _balanced_accuracy(spec: BalancedAccuracy, r: RateTriple) -> float:
    return 0.5 * (r.tpr + r.tnr)


def _jaccard(spec: Jaccard, r: RateTriple) -> float:
    return _div(r.prev * r.tpr, r.prev + (1.0 - r.prev) * r.fpr)


def _fbeta(spec: FBeta, r: RateTriple) -> float:
    b2 = spec.beta**2
    p = r.prev
    return _div((1.0 + b2) * p * r.tpr, b2 * p + p * r.tpr + (1.0 - p) * r.fpr)


def _mcc_core(r: RateTriple, d: float) -> float:
    # sqrt(d + p(1-p)) * (t + s - 1) / sqrt(d + gamma(1-gamma)); d = 0 is plain MCC
    p = r.prev
    gamma = r.gamma
    gamma_c = p * r.fnr + (1.0 - p) * r.tnr
    return _div(
        math.sqrt(d + p * (1.0 - p)) * (r.tpr - r.fpr),
        math.sqrt(d + gamma * gamma_c),
    )


def _mcc(spec: MCC, r: RateTriple) -> float:
    return _mcc_core(r, 0.0)


def _robust_mcc(spec: RobustMCC, r: RateTriple) -> float:
    return _mcc_core(r, spec.d)


def _kappa(spec: Kappa, r: RateTriple) -> float:
    p = r.prev
    gamma = r.gamma
    agreement = 2.0 * p * (1.0 - p) * (r.tpr - r.fpr)
    return _div(agreement, p * (1.0 - gamma) + (1.0 - p) * gamma)


def _yule_q(spec: YuleQ, r: RateTriple) -> float:
    hits = r.tpr * r.tnr
    misses = r.fnr * r.fpr
    return _div(hits - misses, hits + misses)


def _yule_y(spec: YuleY, r: RateTriple) -> float:
    hits = math.sqrt(r.tpr * r.tnr)
    misses = math.sqrt(r.fnr * r.fpr)
    return _div(hits - misses, hits + misses)


def _robust_f(spec: RobustF, r: RateTriple) -> float:
    p = r.prev
    prefactor = (spec.d0 / p + spec.beta**2 + 1.0) / (1.0 + spec.c)
    core = _div(
        spec.c * p + p * r.tpr,
        spec.d0 + spec.d1 * p + p * r.tpr + (1.0 - p) * r.fpr,
    )
    return prefactor * core


VALUE_FORMULAS: dict[type, Callable[[MetricSpec, RateTriple], float]] = {
    Accuracy: _accuracy,
    WeightedAccuracy: _weighted_accuracy,
    BalancedAccuracy: _balanced_accuracy,
    Jaccard: _jaccard,
    FBeta: _fbeta,
    MCC: _mcc,
    Kappa: _kappa,
    YuleQ: _yule_q,
    YuleY: _yule_y,
    RobustF: _robust_f,
    RobustMCC: _robust_mcc,
}


def metric_value(spec: MetricSpec, r: RateTriple) -> float:
    """
    Evaluate a metric at a rate triple.

    Boundary rates (tpr or tnr equal to 0 or 1) are allowed.

    Args:
        spec: The metric to evaluate
        r: Classifier rates and prevalence

    Returns:
        The metric value

    Raises:
        DegenerateMetricError: If the formula has a zero denominator at r
    """
    return VALUE_FORMULAS[type(spec)](spec, r)


# ------------------------------------------------------------------
# Derivative ratios d M / d tnr  over  d M / d tpr
# ------------------------------------------------------------------


def _ratio_accuracy(spec: Accuracy, r: RateTriple) -> float:
    return (1.0 - r.prev) / r.prev


def _ratio_weighted_accuracy(spec: WeightedAccuracy, r: RateTriple) -> float:
    return ((1.0 - spec.w) * (1.0 - r.prev)) / (spec.w * r.prev)


def _ratio_balanced_accuracy(spec: BalancedAccuracy, r: RateTriple) -> float:
    return 1.0


def _ratio_jaccard(spec: Jaccard, r: RateTriple) -> float:
    p = r.prev
    return _div(r.tpr * (1.0 - p), p + (1.0 - p) * r.fpr)


def _ratio_fbeta(spec: FBeta, r: RateTriple) -> float:
    p = r.prev
    return _div(r.tpr * (1.0 - p), spec.beta**2 * p + (1.0 - p) * r.fpr)


def _ratio_mcc_core(r: RateTriple, d: float) -> float:
    p = r.prev
    gamma = r.gamma
    gamma_c = p * r.fnr + (1.0 - p) * r.tnr
    variance = d + gamma * gamma_c
    slope = (r.tpr - r.fpr) * (gamma_c - gamma)
    return _div(2.0 * variance + slope * (1.0 - p), 2.0 * variance - slope * p)


def _ratio_mcc(spec: MCC, r: RateTriple) -> float:
    return _ratio_mcc_core(r, 0.0)


def _ratio_robust_mcc(spec: RobustMCC, r: RateTriple) -> float:
    return _ratio_mcc_core(r, spec.d)


def _ratio_kappa(spec: Kappa, r: RateTriple) -> float:
    p = r.prev
    return _div(r.tpr + p * (1.0 - 2.0 * r.tpr), (1.0 - p) * r.fpr + p * r.tnr)


def _ratio_yule(spec: YuleQ | YuleY, r: RateTriple) -> float:
    # Q and Y share the same ratio
    return _div(r.tpr * r.fnr, r.tnr * r.fpr)


def _ratio_robust_f(spec: RobustF, r: RateTriple) -> float:
    p = r.prev
    return _div(
        (spec.c + r.tpr) * (1.0 - p),
        spec.d0 + (spec.d1 - spec.c) * p + (1.0 - p) * r.fpr,
    )


# Ratios that depend on prev only and stay defined on the boundary
RATE_FREE_RATIOS = (Accuracy, WeightedAccuracy, BalancedAccuracy)

RATIO_FORMULAS: dict[type, Callable[[MetricSpec, RateTriple], float]] = {
    Accuracy: _ratio_accuracy,
    WeightedAccuracy: _ratio_weighted_accuracy,
    BalancedAccuracy: _ratio_balanced_accuracy,
    Jaccard: _ratio_jaccard,
    FBeta: _ratio_fbeta,
    MCC: _ratio_mcc,
    Kappa: _ratio_kappa,
    YuleQ: _ratio_yule,
    YuleY: _ratio_yule,
    RobustF: _ratio_robust_f,
    RobustMCC: _ratio_robust_mcc,
}


def derivative_ratio(spec: MetricSpec, r: RateTriple) -> float:
    """
    Ratio of the partial derivatives of a metric in tnr and tpr.

    This is the right-hand side of the fixed-point equation for the optimal
    density-ratio threshold. The normalizing prefactors of the robust metrics
    depend on prev only and cancel out.

    Args:
        spec: The metric
        r: Classifier rates; tpr and tnr must be strictly interior

    Returns:
        dM/dtnr divided by dM/dtpr

    Raises:
        BoundaryDerivativeError: If tpr or tnr is within 1e-12 of 0 or 1 and the
            ratio depends on the rates
        DegenerateMetricError: If the ratio has a zero denominator at r
    """
    if not isinstance(spec, RATE_FREE_RATIOS) and not r.is_interior(PROB_TOL):
        raise BoundaryDerivativeError()
    return RATIO_FORMULAS[type(spec)](spec, r)


def partial_derivatives(
    spec: MetricSpec, r: RateTriple, step: float = 1e-6
) -> tuple[float, float]:
    """Central finite differences (dM/dtpr, dM/dtnr) of metric_value at r."""

    def shifted(d_tpr: float, d_tnr: float) -> float:
        shifted_triple = RateTriple(
            tpr=r.tpr + d_tpr,
            tnr=r.tnr + d_tnr,
            prev=r.prev,
            fnr=r.fnr - d_tpr,
            fpr=r.fpr - d_tnr,
        )
        return metric_value(spec, shifted_triple)

    d_tpr = (shifted(step, 0.0) - shifted(-step, 0.0)) / (2.0 * step)
    d_tnr = (shifted(0.0, step) - shifted(0.0, -step)) / (2.0 * step)
    return d_tpr, d_tnr


# ------------------------------------------------------------------
# Robustness
# ------------------------------------------------------------------


def robustness_bound(spec: MetricSpec) -> float | None:
    """
    Uniform bound on the optimal threshold over prevalences in (0, 1/2].

    Returns:
        The bound for the robust families, None for all others
    """
    if isinstance(spec, RobustF):
        return (1.0 + spec.c) / min(spec.d0, spec.d0 + spec.d1 - spec.c)
    if isinstance(spec, RobustMCC):
        return (1.0 + 2.0 * spec.d) / (2.0 * spec.d)
    return None


def metric_range(spec: MetricSpec) -> tuple[float, float]:
    """Range of attainable metric values."""
    if isinstance(spec, SIGNED_FAMILIES):
        return (-1.0, 1.0)
    return (0.0, 1.0)
