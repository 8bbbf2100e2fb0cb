"""Distribution function of generalized chi-square variables.

The variable is

    Q = sum_i w_i * chi2_1(nc_i) + s * Z + offset

with independent noncentral chi-square terms of one degree of freedom and a
standard normal Z. The CDF is obtained by inverting the characteristic
function (Imhof's integral):

    F(x) = 1/2 - (1/pi) * int_0^inf sin(theta(u)) / (u * rho(u)) du

The integral is split at HEAD_END. The head is integrated by adaptive
quadrature, the oscillating tail by Fourier-weighted quadrature.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.stats import norm
from tenacity import (
    Retrying,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
)

from utils.env import mc_samples
from utils.errors import DomainError, QuadratureError


logger = logging.getLogger(__name__)

HEAD_END = 1.0
# Subdivision limits tried in turn
QUAD_LIMITS = (200, 1000, 5000)
# Accepted absolute error estimate on the CDF
MAX_ABSERR = 1e-6
EPSABS = 1e-10
EPSREL = 1e-8
# Below this the tail frequency is treated as zero
MIN_FREQUENCY = 1e-12
MC_CHUNK = 100_000


@dataclass(frozen=True)
class GeneralizedChiSquare:
    """Weighted sum of noncentral chi-square(1) terms plus a normal term and an offset."""

    weights: tuple[float, ...]
    noncentralities: tuple[float, ...]
    offset: float = 0.0
    normal_sd: float = 0.0

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.noncentralities):
            raise DomainError("weights and noncentralities differ in length")
        if any(w == 0.0 for w in self.weights):
            raise DomainError("weights must be nonzero; route zero weights to the normal term")
        if any(nc < 0.0 for nc in self.noncentralities) or self.normal_sd < 0.0:
            raise DomainError("noncentralities and normal_sd must be nonnegative")

    @property
    def mean(self) -> float:
        return self.offset + sum(
            w * (1.0 + nc) for w, nc in zip(self.weights, self.noncentralities)
        )


def _theta_rho(law: GeneralizedChiSquare, u: np.ndarray | float):
    """Phase without the x term, and modulus rho(u)."""
    w = np.asarray(law.weights)
    nc = np.asarray(law.noncentralities)
    wu = np.multiply.outer(u, w)
    wu2 = wu * wu
    phase = 0.5 * np.sum(np.arctan(wu) + nc * wu / (1.0 + wu2), axis=-1)
    log_rho = (
        0.25 * np.sum(np.log1p(wu2), axis=-1)
        + 0.5 * np.sum(nc * wu2 / (1.0 + wu2), axis=-1)
        + (law.normal_sd * u) ** 2 / 8.0
    )
    return phase, np.exp(log_rho)


def _imhof(law: GeneralizedChiSquare, x: float, limit: int) -> float:
    """
    One attempt at the Imhof integral with the given subdivision limit.

    Returns the integral over pi, so that F(x) = 1/2 - result and
    P(Q > x) = 1/2 + result.
    """
    # Work with the centred variable: offset moves into x
    shifted = x - law.offset
    omega = shifted / 2.0

    def head(u: float) -> float:
        if u == 0.0:
            # Limit of sin(theta(u)) / u at the origin
            w = np.asarray(law.weights)
            nc = np.asarray(law.noncentralities)
            return float(0.5 * np.sum(w * (1.0 + nc)) - omega)
        phase, rho = _theta_rho(law, u)
        return float(math.sin(phase - omega * u) / (u * rho))

    value, abserr = quad(
        head, 0.0, HEAD_END, epsabs=EPSABS, epsrel=EPSREL, limit=limit, full_output=1
    )[:2]

    if abs(omega) < MIN_FREQUENCY:
        tail, tail_err = quad(
            head, HEAD_END, np.inf, epsabs=EPSABS, epsrel=EPSREL, limit=limit, full_output=1
        )[:2]
        value += tail
        abserr += tail_err
    else:
        # sin(phase - omega u) = sin(phase) cos(omega u) - cos(phase) sin(omega u)
        frequency = abs(omega)
        sign = math.copysign(1.0, omega)

        def sin_part(u: float) -> float:
            phase, rho = _theta_rho(law, u)
            return float(math.sin(phase) / (u * rho))

        def cos_part(u: float) -> float:
            phase, rho = _theta_rho(law, u)
            return float(math.cos(phase) / (u * rho))

        cos_term, cos_err = quad(
            sin_part, HEAD_END, np.inf, weight="cos", wvar=frequency, limit=limit,
            epsabs=EPSABS, full_output=1,
        )[:2]
        sin_term, sin_err = quad(
            cos_part, HEAD_END, np.inf, weight="sin", wvar=frequency, limit=limit,
            epsabs=EPSABS, full_output=1,
        )[:2]
        value += cos_term - sign * sin_term
        abserr += cos_err + sin_err

    abserr /= math.pi
    if not math.isfinite(value) or abserr > MAX_ABSERR:
        raise QuadratureError("characteristic-function inversion did not converge", abserr, limit)
    return value / math.pi


def _inversion_integral(law: GeneralizedChiSquare, x: float) -> float:
    """Imhof integral over pi, retried with growing subdivision limits."""
    for attempt in Retrying(
        stop=stop_after_attempt(len(QUAD_LIMITS)),
        retry=retry_if_exception_type(QuadratureError),
        before_sleep=before_sleep_log(logger, logging.WARNING),
        reraise=True,
    ):
        with attempt:
            return _imhof(law, x, QUAD_LIMITS[attempt.retry_state.attempt_number - 1])
    raise AssertionError("unreachable")


def imhof_cdf(law: GeneralizedChiSquare, x: float) -> float:
    """
    CDF by characteristic-function inversion, retried with growing limits.

    Raises:
        QuadratureError: If every subdivision limit leaves the error estimate too large
    """
    return min(1.0, max(0.0, 0.5 - _inversion_integral(law, x)))


def imhof_sf(law: GeneralizedChiSquare, x: float) -> float:
    """
    P(Q > x) from the same inversion, without forming 1 - CDF.

    Raises:
        QuadratureError: If every subdivision limit leaves the error estimate too large
    """
    return min(1.0, max(0.0, 0.5 + _inversion_integral(law, x)))


def _monte_carlo(
    law: GeneralizedChiSquare, x: float, samples: int, seed: int, upper: bool
) -> float:
    rng = np.random.default_rng(seed)
    w = np.asarray(law.weights)
    shifts = np.sqrt(np.asarray(law.noncentralities))
    hits = 0
    remaining = samples
    while remaining > 0:
        size = min(MC_CHUNK, remaining)
        z = rng.standard_normal((size, w.size)) + shifts
        q = (z * z) @ w + law.offset
        if law.normal_sd > 0.0:
            q = q + law.normal_sd * rng.standard_normal(size)
        hits += int(np.count_nonzero(q > x if upper else q <= x))
        remaining -= size
    return hits / samples


def monte_carlo_cdf(
    law: GeneralizedChiSquare, x: float, samples: int, seed: int = 0
) -> float:
    """Seeded Monte-Carlo estimate of P(Q <= x)."""
    return _monte_carlo(law, x, samples, seed, upper=False)


def monte_carlo_sf(
    law: GeneralizedChiSquare, x: float, samples: int, seed: int = 0
) -> float:
    """Seeded Monte-Carlo estimate of P(Q > x)."""
    return _monte_carlo(law, x, samples, seed, upper=True)


def _evaluate(
    law: GeneralizedChiSquare, x: float, upper: bool, mc_fallback: bool, seed: int
) -> float:
    if not law.weights:
        if law.normal_sd == 0.0:
            below = law.offset <= x
            return float(below != upper)
        z = (x - law.offset) / law.normal_sd
        return float(norm.sf(z) if upper else norm.cdf(z))

    try:
        return imhof_sf(law, x) if upper else imhof_cdf(law, x)
    except QuadratureError as e:
        if not mc_fallback:
            raise
        samples = mc_samples()
        logger.warning("%s; falling back to Monte Carlo with %d samples", e, samples)
        return _monte_carlo(law, x, samples, seed, upper)


def gchisq_cdf(
    law: GeneralizedChiSquare,
    x: float,
    mc_fallback: bool = True,
    seed: int = 0,
) -> float:
    """
    P(Q <= x).

    Without chi-square terms the law is normal and evaluated exactly. If the
    quadrature fails on every attempt, a seeded Monte-Carlo estimate with
    IMBAMETRIC_MC_SAMPLES samples is returned instead, unless disabled.

    Args:
        law: The distribution
        x: Evaluation point
        mc_fallback: Fall back to Monte Carlo when quadrature fails
        seed: Seed of the fallback sampler

    Raises:
        QuadratureError: If quadrature fails and the fallback is disabled
    """
    return _evaluate(law, x, False, mc_fallback, seed)


def gchisq_sf(
    law: GeneralizedChiSquare,
    x: float,
    mc_fallback: bool = True,
    seed: int = 0,
) -> float:
    """P(Q > x), evaluated directly so small upper tails keep their precision."""
    return _evaluate(law, x, True, mc_fallback, seed)
