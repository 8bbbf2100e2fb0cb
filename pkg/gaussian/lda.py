"""Closed-form rates of the density-ratio classifier under shared covariances."""

import math

from scipy.stats import norm

from solver.models import ConditionalRates
from utils.errors import DomainError, ScenarioError

from .scenario import GaussianScenario, mahalanobis_delta


class LDARateModel:
    """
    Rates of the classifier predicting 1 when f1 >= delta * f0 for two
    Gaussians with a shared covariance and Mahalanobis distance Δ:

        tnr = Φ((ln δ + Δ²/2) / Δ),  tpr = Φ((-ln δ + Δ²/2) / Δ)

    Complements come from the survival function, so tiny false positive
    rates keep their relative precision.
    """

    monotone = True
    domain = (0.0, math.inf)

    def __init__(self, mahalanobis: float):
        if not mahalanobis > 0.0:
            raise ScenarioError("zero Mahalanobis distance")
        self.mahalanobis = float(mahalanobis)

    @classmethod
    def from_scenario(cls, scenario: GaussianScenario) -> "LDARateModel":
        return cls(mahalanobis_delta(scenario))

    def rates(self, delta: float) -> ConditionalRates:
        if not delta > 0.0:
            raise DomainError(f"delta={delta!r} must be positive")
        shift = math.log(delta) / self.mahalanobis
        half = self.mahalanobis / 2.0
        negative_arg = shift + half
        positive_arg = half - shift
        return ConditionalRates(
            tpr=float(norm.cdf(positive_arg)),
            tnr=float(norm.cdf(negative_arg)),
            fnr=float(norm.sf(positive_arg)),
            fpr=float(norm.sf(negative_arg)),
        )


def lda_rates(scenario: GaussianScenario, delta: float) -> tuple[float, float]:
    """
    (tpr, tnr) of the density-ratio classifier at delta for an LDA scenario.

    Raises:
        ScenarioError: If the covariances differ or the means coincide
    """
    rates = LDARateModel.from_scenario(scenario).rates(delta)
    return rates.tpr, rates.tnr
