"""Rates of the density-ratio classifier for Gaussians with unequal covariances.

Under either class the log density ratio is a quadratic form in a standard
normal vector. After rotating to the eigenbasis of its matrix it becomes a
generalized chi-square variable, whose CDF gives the rate.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import linalg
from scipy.stats import multivariate_normal

from solver.models import ConditionalRates
from utils.errors import DomainError, ScenarioError

from .gchisq import GeneralizedChiSquare, gchisq_cdf, gchisq_sf
from .scenario import GaussianScenario, sqrtm_sym


logger = logging.getLogger(__name__)

# Eigenvalues below this magnitude belong to the linear part
ZERO_EIGENVALUE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class QuadFormSpec:
    """
    Decomposed discriminant under one class.

    With z standard normal and w = rotation.T @ z, the classifier's rate under
    under_class is P(sum_i eigenvalues_i w_i^2 + 2 sum_i shifts_i w_i  <op>  bound(delta)),
    where <op> is <= under class 1 (ties predicted positive) and < under class 0.
    """

    under_class: int
    matrix: np.ndarray
    rotation: np.ndarray
    eigenvalues: np.ndarray
    shifts: np.ndarray
    # bound(delta) = constant + delta_sign * 2 ln(delta)
    constant: float
    delta_sign: float

    @property
    def quadratic(self) -> np.ndarray:
        """Mask of eigenvalues treated as nonzero."""
        return np.abs(self.eigenvalues) >= ZERO_EIGENVALUE_TOL

    @property
    def weights(self) -> np.ndarray:
        return self.eigenvalues[self.quadratic]

    @property
    def noncentralities(self) -> np.ndarray:
        return (self.shifts[self.quadratic] / self.weights) ** 2

    @property
    def linear_coefficients(self) -> np.ndarray:
        return self.shifts[~self.quadratic]

    @property
    def offset(self) -> float:
        return float(-np.sum(self.shifts[self.quadratic] ** 2 / self.weights))

    def law(self) -> GeneralizedChiSquare:
        """Distribution of the quadratic form."""
        return GeneralizedChiSquare(
            weights=tuple(float(w) for w in self.weights),
            noncentralities=tuple(float(nc) for nc in self.noncentralities),
            offset=self.offset,
            normal_sd=2.0 * float(np.sqrt(np.sum(self.linear_coefficients**2))),
        )

    def bound(self, delta: float) -> float:
        if not delta > 0.0:
            raise DomainError(f"delta={delta!r} must be positive")
        return self.constant + self.delta_sign * 2.0 * math.log(delta)

    def reassemble(self) -> np.ndarray:
        """Matrix rebuilt from the eigendecomposition."""
        return (self.rotation * self.eigenvalues) @ self.rotation.T


def qda_decompose(scenario: GaussianScenario, under_class: int) -> QuadFormSpec:
    """
    Decompose the density-ratio discriminant under class 0 or 1.

    Under class 1, with x = mu1 + S1 z, S1 = sigma1^(1/2) and m = mu1 - mu0,
    predicting 1 is equivalent to

        z' A z - 2 b' z <= 2 ln(1/delta) + ln(|sigma0|/|sigma1|) + m' sigma0^-1 m

    with A = I - S1 sigma0^-1 S1 and b = S1 sigma0^-1 m. Under class 0 the
    roles swap: predicting 0 is equivalent to

        z' A0 z + 2 b0' z < 2 ln(delta) + ln(|sigma1|/|sigma0|) + m' sigma1^-1 m

    with A0 = I - S0 sigma1^-1 S0 and b0 = S0 sigma1^-1 m.

    Raises:
        ScenarioError: If under_class is not 0 or 1
    """
    if under_class not in (0, 1):
        raise ScenarioError(f"under_class must be 0 or 1, got {under_class!r}")

    m = scenario.mu1 - scenario.mu0
    if under_class == 1:
        own, other = scenario.sigma1, scenario.sigma0
        linear_sign, delta_sign = -1.0, -1.0
    else:
        own, other = scenario.sigma0, scenario.sigma1
        linear_sign, delta_sign = 1.0, 1.0

    root = sqrtm_sym(own)
    other_inv_root = linalg.solve(other, root, assume_a="pos")
    matrix = np.eye(scenario.dim) - root @ other_inv_root
    matrix = 0.5 * (matrix + matrix.T)
    b = root @ linalg.solve(other, m, assume_a="pos")

    eigenvalues, rotation = linalg.eigh(matrix)
    shifts = linear_sign * (rotation.T @ b)

    _, logdet_own = np.linalg.slogdet(own)
    _, logdet_other = np.linalg.slogdet(other)
    constant = (logdet_other - logdet_own) + float(m @ linalg.solve(other, m, assume_a="pos"))

    return QuadFormSpec(
        under_class=under_class,
        matrix=matrix,
        rotation=rotation,
        eigenvalues=eigenvalues,
        shifts=shifts,
        constant=float(constant),
        delta_sign=delta_sign,
    )


class QDARateModel:
    """
    Rates of the density-ratio classifier for an arbitrary Gaussian scenario.

    Evaluations are memoized per delta; the cache is safe for concurrent use.
    """

    monotone = True
    domain = (0.0, math.inf)

    def __init__(
        self,
        scenario: GaussianScenario,
        mc_fallback: bool = True,
        seed: int = 0,
        cache_size: int = 8192,
    ):
        self.scenario = scenario
        self.mc_fallback = mc_fallback
        self.seed = seed
        self._positive = qda_decompose(scenario, 1)
        self._negative = qda_decompose(scenario, 0)
        self._positive_law = self._positive.law()
        self._negative_law = self._negative.law()
        self._cached = lru_cache(maxsize=cache_size)(self._compute)

    def _split(self, law: GeneralizedChiSquare, bound: float) -> tuple[float, float]:
        """(P(Q <= bound), P(Q > bound)) with the smaller side evaluated directly."""
        if bound > law.mean:
            upper = gchisq_sf(law, bound, self.mc_fallback, self.seed)
            return 1.0 - upper, upper
        lower = gchisq_cdf(law, bound, self.mc_fallback, self.seed)
        return lower, 1.0 - lower

    def _compute(self, delta: float) -> ConditionalRates:
        tpr, fnr = self._split(self._positive_law, self._positive.bound(delta))
        tnr, fpr = self._split(self._negative_law, self._negative.bound(delta))
        return ConditionalRates(tpr=tpr, tnr=tnr, fnr=fnr, fpr=fpr)

    def rates(self, delta: float) -> ConditionalRates:
        if not delta > 0.0:
            raise DomainError(f"delta={delta!r} must be positive")
        return self._cached(float(delta))


def qda_rates(scenario: GaussianScenario, delta: float) -> tuple[float, float]:
    """(tpr, tnr) of the density-ratio classifier at delta."""
    rates = QDARateModel(scenario).rates(delta)
    return rates.tpr, rates.tnr


@dataclass(frozen=True)
class MonteCarloRates:
    tpr: float
    tnr: float
    tpr_se: float
    tnr_se: float


def monte_carlo_rates(
    scenario: GaussianScenario, delta: float, samples: int, seed: int = 0
) -> MonteCarloRates:
    """
    Empirical rates of the density-ratio classifier on simulated data.

    Draws samples from each class and predicts 1 when log f1 - log f0 >= ln delta.
    """
    if not delta > 0.0:
        raise DomainError(f"delta={delta!r} must be positive")
    rng = np.random.default_rng(seed)
    f0 = multivariate_normal(mean=scenario.mu0, cov=scenario.sigma0)
    f1 = multivariate_normal(mean=scenario.mu1, cov=scenario.sigma1)
    log_delta = math.log(delta)

    def positive_rate(dist) -> float:
        x = dist.rvs(size=samples, random_state=rng).reshape(samples, scenario.dim)
        return float(np.mean(f1.logpdf(x) - f0.logpdf(x) >= log_delta))

    tpr = positive_rate(f1)
    tnr = 1.0 - positive_rate(f0)
    return MonteCarloRates(
        tpr=tpr,
        tnr=tnr,
        tpr_se=math.sqrt(max(tpr * (1.0 - tpr), 1e-12) / samples),
        tnr_se=math.sqrt(max(tnr * (1.0 - tnr), 1e-12) / samples),
    )
