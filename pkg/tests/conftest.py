"""Shared pytest fixtures for imbametric tests."""

import json
from pathlib import Path

import pytest


# ------------------------------------------------------------------
# Scored Sample Fixtures
# ------------------------------------------------------------------

SIX_SCORES = [0.9, 0.8, 0.4, 0.7, 0.3, 0.1]
SIX_LABELS = [1, 1, 1, 0, 0, 0]


@pytest.fixture
def six_samples():
    """Three positives and three negatives with interleaved scores."""
    from empirical import ScoreSet

    return ScoreSet(SIX_SCORES, SIX_LABELS)


@pytest.fixture
def scores_csv(tmp_path: Path) -> Path:
    """Score CSV holding the six-sample set."""
    path = tmp_path / "scores.csv"
    lines = ["score,label"] + [f"{s},{y}" for s, y in zip(SIX_SCORES, SIX_LABELS)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


# ------------------------------------------------------------------
# Scenario Fixtures
# ------------------------------------------------------------------

EXAMPLE_SCENARIO_DATA = {
    "mu0": [0.0, 0.0],
    "mu1": [2.0, 2.0],
    "sigma0": [[4.0, 1.0], [1.0, 1.0]],
    "sigma1": [[4.0, 1.0], [1.0, 1.0]],
}

UNEQUAL_SCENARIO_DATA = {
    "mu0": [0.0, 0.0],
    "mu1": [2.5, 2.5],
    "sigma0": [[2.0, 0.5], [0.5, 1.0]],
    "sigma1": [[1.0, -0.5], [-0.5, 2.0]],
}


@pytest.fixture
def lda_scenario_json(tmp_path: Path) -> Path:
    """Shared-covariance scenario with Mahalanobis distance 2."""
    path = tmp_path / "lda.json"
    path.write_text(json.dumps(EXAMPLE_SCENARIO_DATA), encoding="utf-8")
    return path


@pytest.fixture
def qda_scenario_json(tmp_path: Path) -> Path:
    """Scenario with unequal covariances."""
    path = tmp_path / "qda.json"
    path.write_text(json.dumps(UNEQUAL_SCENARIO_DATA), encoding="utf-8")
    return path


@pytest.fixture
def one_dim_scenario():
    """Equal means, variances 2 (class 0) and 1 (class 1)."""
    from gaussian import GaussianScenario

    return GaussianScenario(mu0=[0.0], mu1=[0.0], sigma0=[[2.0]], sigma1=[[1.0]])


# ------------------------------------------------------------------
# Simulation Fixtures
# ------------------------------------------------------------------


@pytest.fixture
def sim_config_data() -> dict:
    """Small single-cell simulation config."""
    return {
        **EXAMPLE_SCENARIO_DATA,
        "n1": 300,
        "n0": 700,
        "seed": 7,
        "metrics": ["f1.5", "mcc", "f0.5"],
        "grid": {"start": 0.01, "stop": 0.99, "step": 0.01},
    }


@pytest.fixture
def sim_config_json(tmp_path: Path, sim_config_data: dict) -> Path:
    """Simulation config written to disk."""
    path = tmp_path / "sim.json"
    path.write_text(json.dumps(sim_config_data), encoding="utf-8")
    return path
