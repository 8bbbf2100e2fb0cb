"""Population operating curves of a rate model."""

from dataclasses import dataclass
from typing import Sequence

from metrics import CurvePoint, MetricSpec, precision_from_rates

from .fixed_point import FixedPointResult, SolverOptions, solve_fixed_point
from .models import RateModel


@dataclass(frozen=True)
class PopulationOptimum:
    """Metric-optimal point on a population curve."""

    spec: MetricSpec
    result: FixedPointResult
    point: CurvePoint


def curve_point(model: RateModel, delta: float, prev: float) -> CurvePoint:
    """ROC and precision coordinates of the threshold classifier at delta."""
    rates = model.rates(delta)
    return CurvePoint(
        threshold=delta,
        fpr=rates.fpr,
        tpr=rates.tpr,
        precision=precision_from_rates(rates.tpr, rates.fpr, prev),
    )


def population_curve(
    model: RateModel, prev: float, deltas: Sequence[float]
) -> list[CurvePoint]:
    """
    Sample the ROC / recall-vs-(1-precision) curve along thresholds.

    Points are returned by threshold descending, so fpr and tpr are
    nondecreasing for monotone models.
    """
    return [curve_point(model, delta, prev) for delta in sorted(deltas, reverse=True)]


def population_optimal_points(
    model: RateModel,
    specs: Sequence[MetricSpec],
    prev: float,
    opts: SolverOptions | None = None,
) -> list[PopulationOptimum]:
    """Locate each metric's optimal threshold on the population curve."""
    optima = []
    for spec in specs:
        result = solve_fixed_point(spec, model, prev, opts)
        optima.append(
            PopulationOptimum(
                spec=spec,
                result=result,
                point=curve_point(model, result.delta_star, prev),
            )
        )
    return optima
