from .curves import (
    PopulationOptimum,
    curve_point,
    population_curve,
    population_optimal_points,
)
from .fixed_point import (
    FixedPointResult,
    SolverOptions,
    SweepPoint,
    solve_fixed_point,
    sweep_delta_star,
)
from .models import ConditionalRates, RateModel, TabulatedRateModel, triple_at
from .thresholds import (
    threshold_density_to_regression,
    threshold_regression_to_density,
)

__all__ = [
    "PopulationOptimum",
    "curve_point",
    "population_curve",
    "population_optimal_points",
    "FixedPointResult",
    "SolverOptions",
    "SweepPoint",
    "solve_fixed_point",
    "sweep_delta_star",
    "ConditionalRates",
    "RateModel",
    "TabulatedRateModel",
    "triple_at",
    "threshold_density_to_regression",
    "threshold_regression_to_density",
]
