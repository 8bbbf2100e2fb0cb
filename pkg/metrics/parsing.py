"""Text form of metric specifications: `name[:key=value]*`.

Examples: "mcc", "f1.5", "wacc:w=0.3", "frb:c=0:d0=0.1:d1=1", "mccrb:d=0.05".
"""

from typing import Callable

from utils.errors import UsageError

from .specs import (
    MCC,
    Accuracy,
    BalancedAccuracy,
    FBeta,
    Jaccard,
    Kappa,
    MetricSpec,
    RobustF,
    RobustMCC,
    WeightedAccuracy,
    YuleQ,
    YuleY,
)


# name -> (constructor, required parameters, optional parameters)
METRIC_NAMES: dict[str, tuple[Callable[..., MetricSpec], tuple[str, ...], tuple[str, ...]]] = {
    "acc": (Accuracy, (), ()),
    "wacc": (WeightedAccuracy, ("w",), ()),
    "bacc": (BalancedAccuracy, (), ()),
    "jac": (Jaccard, (), ()),
    "mcc": (MCC, (), ()),
    "kappa": (Kappa, (), ()),
    "yuleq": (YuleQ, (), ()),
    "yuley": (YuleY, (), ()),
    "frb": (RobustF, ("c", "d0", "d1"), ("beta",)),
    "mccrb": (RobustMCC, ("d",), ()),
}


def _parse_params(name: str, parts: list[str]) -> dict[str, float]:
    params: dict[str, float] = {}
    for part in parts:
        key, sep, raw = part.partition("=")
        key = key.strip().lower()
        if not sep or not key:
            raise UsageError(f"malformed parameter {part!r} in metric {name!r}")
        if key in params:
            raise UsageError(f"duplicate parameter {key!r} in metric {name!r}")
        try:
            params[key] = float(raw)
        except ValueError:
            raise UsageError(f"parameter {key}={raw!r} is not a number") from None
    return params


def parse_metric_spec(s: str) -> MetricSpec:
    """
    Parse a metric string.

    Raises:
        UsageError: For unknown names or parameters
        MetricParameterError: If the parameters violate the metric's constraints
    """
    name, *parts = s.strip().split(":")
    name = name.strip().lower()
    params = _parse_params(name, parts)

    if name not in METRIC_NAMES:
        if name.startswith("f") and len(name) > 1:
            try:
                beta = float(name[1:])
            except ValueError:
                raise UsageError(f"unknown metric {s!r}") from None
            if params:
                raise UsageError(f"metric {name!r} takes no parameters")
            return FBeta(beta)
        raise UsageError(f"unknown metric {s!r}")

    constructor, required, optional = METRIC_NAMES[name]
    unknown = sorted(set(params) - set(required) - set(optional))
    if unknown:
        raise UsageError(f"unknown parameter(s) {', '.join(unknown)} for metric {name!r}")
    missing = [key for key in required if key not in params]
    if missing:
        raise UsageError(f"metric {name!r} requires {', '.join(missing)}")
    return constructor(**params)


def format_metric_spec(spec: MetricSpec) -> str:
    """Inverse of parse_metric_spec; floats are written exactly."""
    if isinstance(spec, FBeta):
        return f"f{spec.beta!r}"
    for name, (constructor, required, optional) in METRIC_NAMES.items():
        if type(spec) is constructor:
            parts = [name]
            parts += [f"{key}={getattr(spec, key)!r}" for key in required]
            # Optional parameters only when they differ from the default
            parts += [
                f"{key}={getattr(spec, key)!r}"
                for key in optional
                if getattr(spec, key) != getattr(constructor, key)
            ]
            return ":".join(parts)
    raise UsageError(f"cannot format {spec!r}")


def parse_metric_list(s: str) -> list[MetricSpec]:
    """Parse a comma-separated list of metric strings."""
    items = [item for item in s.split(",") if item.strip()]
    if not items:
        raise UsageError("empty metric list")
    return [parse_metric_spec(item) for item in items]
