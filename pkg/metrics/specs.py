"""Metric specifications.

Each metric family is a frozen dataclass holding its parameters. Constraints
are checked on construction so an invalid spec can never reach a formula.
"""

import math
from dataclasses import dataclass
from typing import Union

from utils.errors import MetricParameterError


def _require(condition: bool, constraint: str) -> None:
    if not condition:
        raise MetricParameterError(constraint)


def _finite(**params: float) -> None:
    for name, value in params.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MetricParameterError(f"{name} must be a number, got {value!r}")
        _require(math.isfinite(value), f"{name} must be finite")


def _num(value: float) -> str:
    return f"{value:g}"


@dataclass(frozen=True)
class Accuracy:
    @property
    def label(self) -> str:
        return "ACC"


@dataclass(frozen=True)
class WeightedAccuracy:
    w: float

    def __post_init__(self) -> None:
        _finite(w=self.w)
        _require(0.0 < self.w < 1.0, "w must lie in (0, 1)")

    @property
    def label(self) -> str:
        return f"WACC(w={_num(self.w)})"


@dataclass(frozen=True)
class BalancedAccuracy:
    @property
    def label(self) -> str:
        return "BACC"


@dataclass(frozen=True)
class Jaccard:
    @property
    def label(self) -> str:
        return "JAC"


@dataclass(frozen=True)
class FBeta:
    beta: float

    def __post_init__(self) -> None:
        _finite(beta=self.beta)
        _require(self.beta > 0.0, "beta must be positive")

    @property
    def label(self) -> str:
        return f"F{_num(self.beta)}"


@dataclass(frozen=True)
class MCC:
    @property
    def label(self) -> str:
        return "MCC"


@dataclass(frozen=True)
class Kappa:
    @property
    def label(self) -> str:
        return "Kappa"


@dataclass(frozen=True)
class YuleQ:
    @property
    def label(self) -> str:
        return "YuleQ"


@dataclass(frozen=True)
class YuleY:
    @property
    def label(self) -> str:
        return "YuleY"


@dataclass(frozen=True)
class RobustF:
    """
    Robust F-score.

    c shifts the true positive term, d0 and d1 regularize the denominator.
    beta only enters the normalizing prefactor (d0/prev + beta^2 + 1)/(1 + c).
    """

    c: float
    d0: float
    d1: float
    beta: float = 1.0

    def __post_init__(self) -> None:
        _finite(c=self.c, d0=self.d0, d1=self.d1, beta=self.beta)
        _require(self.c >= 0.0, "c must be nonnegative")
        _require(self.d0 > 0.0, "d0 must be positive")
        _require(self.d1 >= 0.0, "d1 must be nonnegative")
        _require(self.d0 + self.d1 - self.c > 0.0, "d0+d1-c must be positive")
        _require(self.beta > 0.0, "beta must be positive")

    @property
    def label(self) -> str:
        params = f"c={_num(self.c)},d0={_num(self.d0)},d1={_num(self.d1)}"
        if self.beta != 1.0:
            params += f",beta={_num(self.beta)}"
        return f"F_rb({params})"


@dataclass(frozen=True)
class RobustMCC:
    """Robust MCC, with d regularizing the variance of the prediction."""

    d: float

    def __post_init__(self) -> None:
        _finite(d=self.d)
        _require(self.d > 0.0, "d must be positive")

    @property
    def label(self) -> str:
        return f"MCC_rb(d={_num(self.d)})"


MetricSpec = Union[
    Accuracy,
    WeightedAccuracy,
    BalancedAccuracy,
    Jaccard,
    FBeta,
    MCC,
    Kappa,
    YuleQ,
    YuleY,
    RobustF,
    RobustMCC,
]

# Families whose optimal threshold is uniformly bounded in the prevalence
ROBUST_FAMILIES = (RobustF, RobustMCC)

# Families with values in [-1, 1]; all others lie in [0, 1]
SIGNED_FAMILIES = (MCC, RobustMCC, Kappa, YuleQ, YuleY)

# Odds-ratio families: the fixed point is a stationary point, while the
# supremum is approached at the boundary of the rate curve
ASSOCIATION_FAMILIES = (YuleQ, YuleY)
