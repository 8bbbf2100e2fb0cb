"""Fixed-point search for the metric-optimal density-ratio threshold.

The optimal classifier predicts 1 when f1(x) >= delta* f0(x), where delta*
solves delta = derivative_ratio(spec, rates(delta)). The search scans
g(delta) = delta - ratio(delta) on a log grid, refines every sign change by
bracketing root finding and keeps the root with the largest metric value.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import pairwise
from typing import Sequence

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from metrics import ASSOCIATION_FAMILIES, MetricSpec, derivative_ratio, metric_value
from utils.env import max_threads
from utils.errors import (
    DomainError,
    ImbametricError,
    NoFixedPointError,
    NumericError,
    UsageError,
)

from .models import RateModel, triple_at


logger = logging.getLogger(__name__)

# Brent refinement settings
BRENT_XTOL = 1e-14
BRENT_RTOL = 1e-12
BRENT_MAXITER = 200
# Relative margin by which a grid point must beat the best root to replace it
GRID_SLACK = 1e-9


@dataclass(frozen=True)
class SolverOptions:
    """Search grid and tolerances for solve_fixed_point."""

    grid_points: int = 512
    delta_min: float = 1e-6
    delta_max: float = 1e8
    # Residual tolerance, relative to delta for delta >= 1
    tol: float = 1e-8
    # Residual tolerance for delta < 1
    abs_tol: float = 1e-10
    # Also try direct iteration delta <- ratio(delta)
    accelerate: bool = False
    max_iterations: int = 100

    def __post_init__(self) -> None:
        if self.grid_points < 3:
            raise UsageError("grid_points must be at least 3")
        if not (0.0 < self.delta_min < self.delta_max and math.isfinite(self.delta_max)):
            raise UsageError("search domain must satisfy 0 < delta_min < delta_max")
        if not (self.tol > 0.0 and self.abs_tol > 0.0):
            raise UsageError("tolerances must be positive")
        if self.max_iterations < 1:
            raise UsageError("max_iterations must be at least 1")

    def tolerance(self, delta: float) -> float:
        """Residual tolerance accepted at delta."""
        return self.abs_tol if delta < 1.0 else self.tol * delta


@dataclass(frozen=True)
class FixedPointResult:
    delta_star: float
    residual: float
    tpr: float
    tnr: float
    metric_value_at_opt: float
    # Function evaluations spent refining roots
    iterations: int
    # Valid roots compared
    candidates: int
    prev: float


@dataclass(frozen=True)
class SweepPoint:
    """One prevalence of a sweep: a result, or the error that prevented it."""

    prev: float
    result: FixedPointResult | None = None
    error: str | None = None


@dataclass(frozen=True)
class _GridPoint:
    delta: float
    g: float
    value: float


class _Objective:
    """Evaluates the fixed-point residual and metric for one (spec, model, prev)."""

    def __init__(self, spec: MetricSpec, model: RateModel, prev: float):
        self.spec = spec
        self.model = model
        self.prev = prev
        self.calls = 0

    def g(self, delta: float) -> float:
        self.calls += 1
        r = triple_at(self.model, delta, self.prev)
        return delta - derivative_ratio(self.spec, r)

    def value(self, delta: float) -> float:
        return metric_value(self.spec, triple_at(self.model, delta, self.prev))

    def evaluate(self, delta: float) -> _GridPoint | None:
        try:
            return _GridPoint(delta=delta, g=self.g(delta), value=self.value(delta))
        except NumericError as e:
            logger.debug("Skipping grid point delta=%.6g: %s", delta, e)
            return None


def _search_grid(model: RateModel, opts: SolverOptions) -> np.ndarray:
    lo = max(opts.delta_min, model.domain[0])
    hi = min(opts.delta_max, model.domain[1])
    if not lo < hi:
        raise UsageError(
            f"empty search domain: [{opts.delta_min}, {opts.delta_max}] "
            f"does not meet the model domain {model.domain}"
        )
    return np.geomspace(lo, hi, opts.grid_points)


def _refine(objective: _Objective, left: _GridPoint, right: _GridPoint) -> float | None:
    """Brent refinement of a bracketed sign change."""
    try:
        root, info = brentq(
            objective.g,
            left.delta,
            right.delta,
            xtol=BRENT_XTOL,
            rtol=BRENT_RTOL,
            maxiter=BRENT_MAXITER,
            full_output=True,
            disp=False,
        )
    except NumericError as e:
        logger.debug(
            "Bracket [%.6g, %.6g] abandoned: %s", left.delta, right.delta, e
        )
        return None
    if not info.converged:
        logger.debug("Bracket [%.6g, %.6g] did not converge", left.delta, right.delta)
        return None
    return float(root)


def _grid_best(points: list[_GridPoint]) -> int:
    return max(range(len(points)), key=lambda i: points[i].value)


def _refine_tangent(objective: _Objective, points: list[_GridPoint], best: int) -> float | None:
    """Refine the metric maximum between the neighbours of grid point `best`."""
    if best == 0 or best == len(points) - 1:
        return None

    def negative_value(log_delta: float) -> float:
        try:
            return -objective.value(math.exp(log_delta))
        except NumericError:
            return math.inf

    found = minimize_scalar(
        negative_value,
        bounds=(math.log(points[best - 1].delta), math.log(points[best + 1].delta)),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(math.exp(found.x))


def _grid_maximum(
    objective: _Objective, points: list[_GridPoint], best: int
) -> tuple[float, float, float]:
    """Metric maximum around grid point `best` as (delta, value, residual)."""
    delta, value = points[best].delta, points[best].value
    refined = _refine_tangent(objective, points, best)
    if refined is not None:
        try:
            refined_value = objective.value(refined)
        except NumericError:
            refined_value = -math.inf
        if refined_value > value:
            delta, value = refined, refined_value
    try:
        residual = abs(objective.g(delta))
    except NumericError:
        residual = math.nan
    return delta, value, residual


def _accelerate(objective: _Objective, opts: SolverOptions) -> float | None:
    """Direct iteration delta <- ratio(delta) started at 1."""
    delta = 1.0
    for _ in range(opts.max_iterations):
        try:
            updated = delta - objective.g(delta)
        except NumericError as e:
            logger.debug("Direct iteration stopped at delta=%.6g: %s", delta, e)
            return None
        if not (updated > 0.0 and math.isfinite(updated)):
            return None
        if abs(updated - delta) <= opts.tolerance(updated):
            return updated
        delta = updated
    logger.debug("Direct iteration did not settle in %d steps", opts.max_iterations)
    return None


def solve_fixed_point(
    spec: MetricSpec,
    model: RateModel,
    prev: float,
    opts: SolverOptions | None = None,
) -> FixedPointResult:
    """
    Solve for the metric-optimal density-ratio threshold.

    Args:
        spec: Metric to optimize
        model: Rates of the threshold classifier as a function of delta
        prev: Prevalence P(Y=1)
        opts: Search grid and tolerances

    Returns:
        The accepted root with the largest metric value. When a grid point
        beats every root, the refined grid maximum is returned instead

    Raises:
        NoFixedPointError: If no candidate passes the residual check
    """
    opts = opts or SolverOptions()
    if not 0.0 < prev < 1.0:
        raise DomainError(f"prev={prev!r} outside (0, 1)")

    objective = _Objective(spec, model, prev)

    # Coarse scan; grid points where the ratio is undefined are skipped
    points = [p for p in map(objective.evaluate, _search_grid(model, opts)) if p is not None]
    if not points:
        raise NoFixedPointError("no fixed point in domain: no valid grid point")
    scan_calls = objective.calls

    # Bracket sign changes between consecutive valid grid points
    roots: list[float] = [p.delta for p in points if p.g == 0.0]
    for left, right in pairwise(points):
        if left.g * right.g < 0.0:
            root = _refine(objective, left, right)
            if root is not None:
                roots.append(root)

    if not roots:
        tangent = _refine_tangent(objective, points, _grid_best(points))
        if tangent is not None:
            roots.append(tangent)

    if opts.accelerate:
        iterated = _accelerate(objective, opts)
        if iterated is not None:
            roots.append(iterated)

    # Keep roots whose residual passes; poles of the ratio fail here
    accepted: list[tuple[float, float, float]] = []
    for root in roots:
        try:
            residual = abs(objective.g(root))
            value = objective.value(root)
        except NumericError as e:
            logger.debug("Rejecting root %.6g: %s", root, e)
            continue
        if residual > opts.tolerance(root):
            logger.debug("Rejecting root %.6g: residual %.3g", root, residual)
            continue
        accepted.append((value, root, residual))

    if not accepted:
        raise NoFixedPointError()

    value, delta_star, residual = max(accepted, key=lambda item: item[0])

    # The result must be at least as good as every grid point, except for
    # odds-ratio metrics whose supremum sits on the boundary
    best = _grid_best(points)
    beaten = points[best].value > value + GRID_SLACK * max(1.0, abs(value))
    if beaten and isinstance(spec, ASSOCIATION_FAMILIES):
        logger.debug("%s: stationary point delta=%.6g is not a grid maximum", spec.label, delta_star)
    elif beaten:
        delta_star, value, residual = _grid_maximum(objective, points, best)
        logger.warning(
            "%s at prev=%g: metric maximum at delta=%.6g is not a fixed point "
            "(residual %.3g); returning it instead of the best root",
            spec.label,
            prev,
            delta_star,
            residual,
        )

    r = triple_at(model, delta_star, prev)
    return FixedPointResult(
        delta_star=delta_star,
        residual=residual,
        tpr=r.tpr,
        tnr=r.tnr,
        metric_value_at_opt=value,
        iterations=objective.calls - scan_calls,
        candidates=len(accepted),
        prev=prev,
    )


def sweep_delta_star(
    spec: MetricSpec,
    model: RateModel,
    prev_grid: Sequence[float],
    opts: SolverOptions | None = None,
) -> list[SweepPoint]:
    """
    Solve the fixed point for every prevalence of a grid.

    Grid points are solved on a thread pool capped by IMBAMETRIC_THREADS.
    Failures are recorded on their SweepPoint and do not stop the sweep.

    Returns:
        One SweepPoint per grid value, in grid order
    """
    opts = opts or SolverOptions()

    def solve_one(prev: float) -> SweepPoint:
        try:
            return SweepPoint(prev=prev, result=solve_fixed_point(spec, model, prev, opts))
        except ImbametricError as e:
            logger.warning("No optimal threshold for %s at prev=%g: %s", spec.label, prev, e)
            return SweepPoint(prev=prev, error=str(e))

    if not prev_grid:
        return []
    workers = min(max_threads(), len(prev_grid))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(solve_one, prev_grid))
