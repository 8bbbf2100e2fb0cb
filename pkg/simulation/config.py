"""Simulation configuration and its JSON form."""

import json
from dataclasses import dataclass, field
from pathlib import Path

from empirical import GridSpec
from gaussian import GaussianScenario, scenario_from_dict
from metrics import MetricSpec, parse_metric_spec
from utils.errors import DataError, ScenarioError


@dataclass(frozen=True)
class SimConfig:
    """
    One simulation cell: n1 positives and n0 negatives from a scenario.

    prevalences and total, when set, turn the config into an imbalance study
    with one cell per sample prevalence.
    """

    scenario: GaussianScenario
    n1: int
    n0: int
    seed: int
    metrics: tuple[MetricSpec, ...]
    grid: GridSpec = field(default_factory=GridSpec)
    holdout: bool = False
    prevalences: tuple[float, ...] = ()
    total: int | None = None

    def __post_init__(self) -> None:
        if self.n1 < 2 or self.n0 < 2:
            raise ScenarioError(f"n1 and n0 must be at least 2, got n1={self.n1}, n0={self.n0}")
        if not self.metrics:
            raise ScenarioError("at least one metric is required")
        if not 0 <= self.seed < 2**64:
            raise ScenarioError("seed must be a 64-bit unsigned integer")
        if any(not 0.0 < p < 1.0 for p in self.prevalences):
            raise ScenarioError("prevalences must lie in (0, 1)")
        if self.prevalences and (self.total is None or self.total < 4):
            raise ScenarioError("an imbalance study needs a total sample size of at least 4")

    @property
    def prevalence(self) -> float:
        """Sample prevalence n1 / (n1 + n0)."""
        return self.n1 / (self.n1 + self.n0)


def cell_sizes(prevalence: float, total: int) -> tuple[int, int]:
    """(n1, n0) for a study cell, keeping at least two samples in each class."""
    n1 = min(max(2, round(prevalence * total)), total - 2)
    return n1, total - n1


def _integer(data: dict, key: str, default: int | None = None) -> int:
    value = data.get(key, default)
    if value is None:
        raise ScenarioError(f"config is missing {key!r}")
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"{key!r} must be an integer")
    return value


def sim_config_from_dict(data: dict) -> SimConfig:
    """Build a SimConfig from the parsed sim JSON."""
    if not isinstance(data, dict):
        raise ScenarioError("config must be a JSON object")

    metrics = data.get("metrics")
    if not isinstance(metrics, list) or not all(isinstance(m, str) for m in metrics):
        raise ScenarioError("'metrics' must be a list of metric strings")

    grid_data = data.get("grid") or {}
    if not isinstance(grid_data, dict):
        raise ScenarioError("'grid' must be an object with start, stop, step")
    prevalences = data.get("prevalences") or []
    if not isinstance(prevalences, list):
        raise ScenarioError("'prevalences' must be a list")

    try:
        grid = GridSpec(**grid_data)
    except TypeError as e:
        raise ScenarioError(f"invalid grid: {e}") from e

    total = data.get("total")
    if prevalences:
        total = _integer(data, "total")
        # Cell sizes come from the prevalences; n1 and n0 describe the first cell
        n1, n0 = cell_sizes(prevalences[0], total)
    else:
        n1 = _integer(data, "n1")
        n0 = _integer(data, "n0")

    return SimConfig(
        scenario=scenario_from_dict(data),
        n1=n1,
        n0=n0,
        seed=_integer(data, "seed", 0),
        metrics=tuple(parse_metric_spec(m) for m in metrics),
        grid=grid,
        holdout=bool(data.get("holdout", False)),
        prevalences=tuple(float(p) for p in prevalences),
        total=total,
    )


def load_sim_config(path: str | Path) -> SimConfig:
    """
    Load a sim JSON file: the scenario fields plus n1, n0, seed, metrics and
    optional grid, holdout, prevalences and total.
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise DataError(f"cannot read config {path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise DataError(f"invalid JSON in {path}: {e}") from e
    return sim_config_from_dict(data)
