from .gchisq import (
    GeneralizedChiSquare,
    gchisq_cdf,
    gchisq_sf,
    imhof_cdf,
    imhof_sf,
    monte_carlo_cdf,
    monte_carlo_sf,
)
from .lda import LDARateModel, lda_rates
from .qda import (
    MonteCarloRates,
    QDARateModel,
    QuadFormSpec,
    monte_carlo_rates,
    qda_decompose,
    qda_rates,
)
from .scenario import (
    EXAMPLE_SCENARIO,
    SCENARIO_1,
    SCENARIO_2,
    GaussianScenario,
    load_scenario,
    mahalanobis_delta,
    scenario_from_dict,
)

__all__ = [
    "GeneralizedChiSquare",
    "gchisq_cdf",
    "gchisq_sf",
    "imhof_cdf",
    "imhof_sf",
    "monte_carlo_cdf",
    "monte_carlo_sf",
    "LDARateModel",
    "lda_rates",
    "MonteCarloRates",
    "QDARateModel",
    "QuadFormSpec",
    "monte_carlo_rates",
    "qda_decompose",
    "qda_rates",
    "EXAMPLE_SCENARIO",
    "SCENARIO_1",
    "SCENARIO_2",
    "GaussianScenario",
    "load_scenario",
    "mahalanobis_delta",
    "scenario_from_dict",
]
