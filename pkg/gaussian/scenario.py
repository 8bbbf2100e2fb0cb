"""Class-conditional Gaussian scenarios."""

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np
from scipy import linalg

from utils.errors import DataError, ScenarioError


MAX_DIMENSION = 50
SYMMETRY_TOL = 1e-10
EQUAL_COV_TOL = 1e-12

SCENARIO_KEYS = ("mu0", "mu1", "sigma0", "sigma1")


def _frozen(values: Any, name: str, ndim: int) -> np.ndarray:
    try:
        arr = np.array(values, dtype=float)
    except (TypeError, ValueError) as e:
        raise ScenarioError(f"{name} is not numeric: {e}") from e
    if arr.ndim != ndim:
        raise ScenarioError(f"{name} must have {ndim} dimension(s), got {arr.ndim}")
    if not np.all(np.isfinite(arr)):
        raise ScenarioError(f"{name} contains non-finite values")
    arr.setflags(write=False)
    return arr


def _check_covariance(sigma: np.ndarray, name: str, dim: int) -> None:
    if sigma.shape != (dim, dim):
        raise ScenarioError(f"{name} must be {dim}x{dim}, got {sigma.shape}")
    if np.max(np.abs(sigma - sigma.T)) > SYMMETRY_TOL:
        raise ScenarioError(f"{name} is not symmetric")
    if np.min(linalg.eigvalsh(sigma)) <= 0.0:
        raise ScenarioError(f"{name} is not positive definite")


def sqrtm_sym(sigma: np.ndarray) -> np.ndarray:
    """Symmetric square root of a positive-definite matrix."""
    eigenvalues, eigenvectors = linalg.eigh(sigma)
    return (eigenvectors * np.sqrt(eigenvalues)) @ eigenvectors.T


@dataclass(frozen=True, eq=False)
class GaussianScenario:
    """
    Pair of class-conditional Gaussians N(mu0, sigma0) and N(mu1, sigma1).

    Arrays are copied and made read-only on construction. equal_cov is
    detected when not given.
    """

    mu0: np.ndarray
    mu1: np.ndarray
    sigma0: np.ndarray
    sigma1: np.ndarray
    equal_cov: bool | None = None

    def __post_init__(self) -> None:
        mu0 = _frozen(self.mu0, "mu0", 1)
        mu1 = _frozen(self.mu1, "mu1", 1)
        sigma0 = _frozen(self.sigma0, "sigma0", 2)
        sigma1 = _frozen(self.sigma1, "sigma1", 2)

        dim = mu0.size
        if dim < 1 or dim > MAX_DIMENSION:
            raise ScenarioError(f"dimension must lie in [1, {MAX_DIMENSION}], got {dim}")
        if mu1.size != dim:
            raise ScenarioError("mu0 and mu1 differ in dimension")
        _check_covariance(sigma0, "sigma0", dim)
        _check_covariance(sigma1, "sigma1", dim)

        same = bool(np.max(np.abs(sigma0 - sigma1)) <= EQUAL_COV_TOL)
        if self.equal_cov and not same:
            raise ScenarioError("equal_cov set but sigma0 and sigma1 differ")

        object.__setattr__(self, "mu0", mu0)
        object.__setattr__(self, "mu1", mu1)
        object.__setattr__(self, "sigma0", sigma0)
        object.__setattr__(self, "sigma1", sigma1)
        object.__setattr__(self, "equal_cov", same if self.equal_cov is None else bool(self.equal_cov))

    @classmethod
    def lda(cls, mu0: Any, mu1: Any, sigma: Any) -> "GaussianScenario":
        """Scenario with a shared covariance matrix."""
        return cls(mu0=mu0, mu1=mu1, sigma0=sigma, sigma1=sigma, equal_cov=True)

    @property
    def dim(self) -> int:
        return int(self.mu0.size)

    def to_dict(self) -> dict[str, list]:
        return {
            "mu0": self.mu0.tolist(),
            "mu1": self.mu1.tolist(),
            "sigma0": self.sigma0.tolist(),
            "sigma1": self.sigma1.tolist(),
        }


def scenario_from_dict(data: dict) -> GaussianScenario:
    """Build a scenario from the JSON schema {"mu0", "mu1", "sigma0", "sigma1"}."""
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")
    missing = [key for key in SCENARIO_KEYS if key not in data]
    if missing:
        raise ScenarioError(f"scenario is missing {', '.join(missing)}")
    return GaussianScenario(**{key: data[key] for key in SCENARIO_KEYS})


def load_scenario(path: str | Path) -> GaussianScenario:
    """
    Load a scenario JSON file.

    Raises:
        DataError: If the file cannot be read or parsed
        ScenarioError: If the scenario is invalid
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise DataError(f"cannot read scenario {path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise DataError(f"invalid JSON in {path}: {e}") from e
    return scenario_from_dict(data)


def mahalanobis_delta(scenario: GaussianScenario) -> float:
    """
    Mahalanobis distance between the class means under a shared covariance.

    Raises:
        ScenarioError: If the covariances differ
    """
    if not scenario.equal_cov:
        raise ScenarioError("Δ defined only for LDA")
    diff = scenario.mu1 - scenario.mu0
    if not np.any(diff):
        return 0.0
    solved = linalg.solve(scenario.sigma0, diff, assume_a="pos")
    return math.sqrt(float(diff @ solved))


# Quadratic discriminant scenarios with unequal covariances
SCENARIO_1 = GaussianScenario(
    mu0=[0.0, 0.0],
    mu1=[2.5, 2.5],
    sigma0=[[2.0, 0.5], [0.5, 1.0]],
    sigma1=[[1.0, -0.5], [-0.5, 2.0]],
)
SCENARIO_2 = GaussianScenario(
    mu0=[0.0, 0.0],
    mu1=[1.5, 1.5],
    sigma0=[[2.0, 0.3], [0.3, 1.0]],
    sigma1=[[1.0, -0.9], [-0.9, 2.0]],
)

# Shared-covariance scenario of the logistic regression simulations, Δ = 2
EXAMPLE_SCENARIO = GaussianScenario.lda(
    mu0=[0.0, 0.0],
    mu1=[2.0, 2.0],
    sigma=[[4.0, 1.0], [1.0, 1.0]],
)
