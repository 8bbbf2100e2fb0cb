"""Parsed command configuration."""

import argparse
from dataclasses import dataclass, field
from typing import Any

from empirical import GridSpec
from metrics import MetricSpec, parse_metric_list, parse_metric_spec
from solver import SolverOptions
from utils.errors import UsageError


SOLVER_FLAGS = ("grid_points", "delta_min", "delta_max", "tol")
GRID_FLAGS = {"grid_start": "start", "grid_stop": "stop", "grid_step": "step"}


def parse_float_list(raw: str, name: str) -> list[float]:
    """Parse "a,b,c" into floats."""
    try:
        values = [float(item) for item in raw.split(",") if item.strip()]
    except ValueError:
        raise UsageError(f"{name} must be a comma-separated list of numbers") from None
    if not values:
        raise UsageError(f"{name} is empty")
    return values


@dataclass(frozen=True)
class CommandConfig:
    """A subcommand with its options; metric strings are parsed on access."""

    subcommand: str
    options: dict[str, Any] = field(default_factory=dict)
    digits: int = 4
    out: str | None = None

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "CommandConfig":
        options = dict(vars(args))
        subcommand = options.pop("subcommand")
        digits = options.pop("digits", 4)
        out = options.pop("out", None)
        options.pop("verbose", None)
        if digits < 1:
            raise UsageError("--digits must be at least 1")
        return cls(subcommand=subcommand, options=options, digits=digits, out=out)

    def get(self, key: str, default: Any = None) -> Any:
        value = self.options.get(key)
        return default if value is None else value

    def require(self, key: str) -> Any:
        value = self.options.get(key)
        if value is None:
            raise UsageError(f"--{key.replace('_', '-')} is required")
        return value

    def metric(self, key: str = "metric") -> MetricSpec:
        return parse_metric_spec(self.require(key))

    def metrics(self, key: str = "metrics") -> list[MetricSpec]:
        return parse_metric_list(self.require(key))

    def floats(self, key: str) -> list[float]:
        return parse_float_list(str(self.require(key)), f"--{key.replace('_', '-')}")

    def solver_options(self) -> SolverOptions:
        overrides = {
            flag: self.options[flag]
            for flag in SOLVER_FLAGS
            if self.options.get(flag) is not None
        }
        return SolverOptions(accelerate=bool(self.options.get("accelerate")), **overrides)

    def grid(self) -> GridSpec:
        overrides = {
            field_name: self.options[flag]
            for flag, field_name in GRID_FLAGS.items()
            if self.options.get(flag) is not None
        }
        return GridSpec(**overrides)
