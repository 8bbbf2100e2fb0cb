"""Logistic regression by iteratively reweighted least squares."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg
from scipy.special import expit

from utils.errors import DataError


logger = logging.getLogger(__name__)

MAX_ITERATIONS = 100
GRADIENT_TOL = 1e-8
RIDGE = 1e-10
MAX_HALVINGS = 40


@dataclass(frozen=True)
class LogisticFit:
    """
    Fitted intercept and slopes.

    max_gradient_norm is the infinity norm of the mean score vector at the
    returned coefficients.
    """

    coefficients: np.ndarray
    converged: bool
    iterations: int
    max_gradient_norm: float
    diagnostic: str | None = None

    @property
    def intercept(self) -> float:
        return float(self.coefficients[0])

    @property
    def slopes(self) -> np.ndarray:
        return self.coefficients[1:]

    def predict(self, features: np.ndarray) -> np.ndarray:
        """Estimated P(Y=1 | x) for each row."""
        return expit(self.intercept + np.asarray(features, dtype=float) @ self.slopes)


def _log_likelihood(design: np.ndarray, labels: np.ndarray, beta: np.ndarray) -> float:
    eta = design @ beta
    return float(np.sum(labels * eta - np.logaddexp(0.0, eta)))


def fit_logistic(
    features: np.ndarray,
    labels: np.ndarray,
    max_iterations: int = MAX_ITERATIONS,
) -> LogisticFit:
    """
    Maximum-likelihood logistic regression with intercept.

    Newton steps on the weighted normal equations, with a small ridge on the
    information matrix and step halving whenever a step lowers the
    likelihood. Perfect separation and very rare classes are reported as
    non-converged fits with a diagnostic; the last iterate is returned.

    Args:
        features: Array of shape (n, d)
        labels: 0/1 array of shape (n,)
        max_iterations: Newton step limit

    Raises:
        DataError: If a class is missing or the design matrix is rank deficient
    """
    x = np.asarray(features, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    y = np.asarray(labels, dtype=float)
    if x.shape[0] != y.shape[0]:
        raise DataError("features and labels differ in length")
    if not np.any(y == 1) or not np.any(y == 0):
        raise DataError("logistic regression needs both classes")

    n = y.size
    design = np.column_stack([np.ones(n), x])
    if np.linalg.matrix_rank(design) < design.shape[1]:
        raise DataError("design matrix is rank deficient")

    beta = np.zeros(design.shape[1])
    loglik = _log_likelihood(design, y, beta)
    converged = False
    diagnostic = None
    iterations = 0

    for iterations in range(1, max_iterations + 1):
        p = expit(design @ beta)
        gradient = design.T @ (y - p) / n
        if np.max(np.abs(gradient)) <= GRADIENT_TOL:
            converged = True
            iterations -= 1
            break

        weights = p * (1.0 - p)
        information = (design.T * weights) @ design / n
        information[np.diag_indices_from(information)] += RIDGE
        try:
            step = linalg.solve(information, gradient, assume_a="pos")
        except linalg.LinAlgError:
            diagnostic = "singular information matrix"
            break

        # Step halving keeps the likelihood nondecreasing
        scale = 1.0
        for _ in range(MAX_HALVINGS):
            candidate = beta + scale * step
            candidate_loglik = _log_likelihood(design, y, candidate)
            if candidate_loglik >= loglik:
                break
            scale /= 2.0
        else:
            diagnostic = "no ascent direction"
            break
        beta, loglik = candidate, candidate_loglik

    gradient = design.T @ (y - expit(design @ beta)) / n
    max_gradient_norm = float(np.max(np.abs(gradient)))
    converged = converged or max_gradient_norm <= GRADIENT_TOL
    if converged:
        diagnostic = None

    eta = design @ beta
    rare = int(min(np.sum(y == 1), np.sum(y == 0)))
    if np.min(eta[y == 1]) > np.max(eta[y == 0]):
        converged, diagnostic = False, "perfect separation"
    elif rare < design.shape[1]:
        converged, diagnostic = False, f"rare class: {rare} sample(s)"
    elif not converged and diagnostic is None:
        diagnostic = f"not converged after {max_iterations} iterations"

    if not converged:
        logger.warning("Logistic fit flagged: %s", diagnostic)
    return LogisticFit(
        coefficients=beta,
        converged=converged,
        iterations=iterations,
        max_gradient_norm=max_gradient_norm,
        diagnostic=diagnostic,
    )
