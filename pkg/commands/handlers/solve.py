"""Handlers for the Gaussian threshold solvers: solve-lda, solve-qda, sweep-pi."""

from gaussian import LDARateModel, QDARateModel, load_scenario
from metrics import robustness_bound
from solver import (
    FixedPointResult,
    RateModel,
    solve_fixed_point,
    sweep_delta_star,
    threshold_density_to_regression,
)
from utils import console, show_table, show_written, write_csv

from ..config import CommandConfig


SOLVE_COLUMNS = (
    "metric", "model", "prevalence", "delta_star", "tilde_delta",
    "tpr", "tnr", "value", "residual",
)
SWEEP_PI_COLUMNS = (
    "prevalence", "delta_star", "tilde_delta", "tpr", "tnr", "value", "bound", "error",
)


def _solve_row(label: str, model_name: str, result: FixedPointResult) -> tuple:
    return (
        label,
        model_name,
        result.prev,
        result.delta_star,
        threshold_density_to_regression(result.delta_star, result.prev),
        result.tpr,
        result.tnr,
        result.metric_value_at_opt,
        result.residual,
    )


def _emit(cfg: CommandConfig, title: str, columns, rows) -> None:
    show_table(title, columns, rows, cfg.digits)
    if cfg.out:
        show_written(str(write_csv(cfg.out, columns, rows)))


def _scenario_model(path: str, cfg: CommandConfig) -> tuple[str, RateModel]:
    scenario = load_scenario(path)
    if scenario.equal_cov:
        model = LDARateModel.from_scenario(scenario)
        return f"LDA(Δ={model.mahalanobis:.6g})", model
    return "QDA", QDARateModel(scenario, mc_fallback=not cfg.get("no_mc_fallback", False))


def run_solve_lda(cfg: CommandConfig) -> None:
    """Optimal threshold for each (Δ, prevalence) pair."""
    spec = cfg.metric()
    prevs = cfg.floats("pi")
    opts = cfg.solver_options()

    if cfg.get("scenario"):
        scenario = load_scenario(cfg.get("scenario"))
        models = [LDARateModel.from_scenario(scenario)]
    else:
        models = [LDARateModel(d) for d in cfg.floats("delta_mahalanobis")]

    rows = []
    with console.status("[cyan]Solving fixed points...[/cyan]"):
        for model in models:
            name = f"LDA(Δ={model.mahalanobis:g})"
            for prev in prevs:
                rows.append(_solve_row(spec.label, name, solve_fixed_point(spec, model, prev, opts)))
    _emit(cfg, f"Optimal thresholds for {spec.label}", SOLVE_COLUMNS, rows)


def run_solve_qda(cfg: CommandConfig) -> None:
    """Optimal threshold for each prevalence under a scenario JSON."""
    spec = cfg.metric()
    prevs = cfg.floats("pi")
    opts = cfg.solver_options()
    scenario = load_scenario(cfg.require("scenario"))
    model = QDARateModel(scenario, mc_fallback=not cfg.get("no_mc_fallback", False))

    rows = []
    with console.status("[cyan]Solving fixed points...[/cyan]"):
        for prev in prevs:
            rows.append(_solve_row(spec.label, "QDA", solve_fixed_point(spec, model, prev, opts)))
    _emit(cfg, f"Optimal thresholds for {spec.label}", SOLVE_COLUMNS, rows)


def run_sweep_pi(cfg: CommandConfig) -> None:
    """Optimal threshold over a prevalence grid; failed points are reported, not fatal."""
    spec = cfg.metric()
    grid = cfg.floats("pi_grid")
    opts = cfg.solver_options()
    bound = robustness_bound(spec)

    if cfg.get("scenario"):
        model_name, model = _scenario_model(cfg.get("scenario"), cfg)
    else:
        model = LDARateModel(cfg.require("delta_mahalanobis"))
        model_name = f"LDA(Δ={model.mahalanobis:g})"

    with console.status(f"[cyan]Sweeping {len(grid)} prevalences...[/cyan]"):
        points = sweep_delta_star(spec, model, grid, opts)

    rows = []
    for point in points:
        r = point.result
        if r is None:
            rows.append((point.prev, None, None, None, None, None, bound, point.error))
            continue
        rows.append(
            (
                point.prev,
                r.delta_star,
                threshold_density_to_regression(r.delta_star, r.prev),
                r.tpr,
                r.tnr,
                r.metric_value_at_opt,
                bound,
                None,
            )
        )
    _emit(cfg, f"{spec.label} under {model_name}", SWEEP_PI_COLUMNS, rows)
