"""Seeded sampling from Gaussian scenarios."""

import numpy as np
from scipy import linalg

from utils.errors import ScenarioError

from .config import SimConfig


def rng_for(seed: int, stream: int, holdout: bool = False) -> np.random.Generator:
    """Independent generator per (seed, stream); holdout draws use their own stream."""
    entropy = [seed, stream, 1] if holdout else [seed, stream]
    return np.random.default_rng(entropy)


def _cholesky(sigma: np.ndarray, name: str) -> np.ndarray:
    try:
        return linalg.cholesky(sigma, lower=True)
    except linalg.LinAlgError as e:
        raise ScenarioError(f"{name} is not positive definite") from e


def sample_scenario(
    cfg: SimConfig, stream: int = 0, holdout: bool = False
) -> tuple[np.ndarray, np.ndarray]:
    """
    Draw n1 positives followed by n0 negatives.

    Args:
        cfg: Scenario and sample sizes
        stream: Cell index; each (seed, stream) pair gives an independent sample
        holdout: Draw from the holdout stream of the cell

    Returns:
        Features of shape (n1 + n0, d) and labels of shape (n1 + n0,)
    """
    rng = rng_for(cfg.seed, stream, holdout)
    scenario = cfg.scenario
    lower1 = _cholesky(scenario.sigma1, "sigma1")
    lower0 = _cholesky(scenario.sigma0, "sigma0")

    positives = scenario.mu1 + rng.standard_normal((cfg.n1, scenario.dim)) @ lower1.T
    negatives = scenario.mu0 + rng.standard_normal((cfg.n0, scenario.dim)) @ lower0.T

    features = np.vstack([positives, negatives])
    labels = np.concatenate([np.ones(cfg.n1, dtype=np.int8), np.zeros(cfg.n0, dtype=np.int8)])
    return features, labels
