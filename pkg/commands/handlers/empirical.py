"""Handlers for score-file commands: eval, sweep, roc."""

from empirical import (
    confusion_at,
    grid_optimize,
    load_scores,
    optimal_points,
    recall_vs_one_minus_precision,
    roc_auc,
    roc_curve,
    sweep_table,
)
from metrics import ConfusionCounts, metric_value, triple_from_counts
from utils import console, show_table, show_written, write_csv
from utils.errors import UsageError

from ..config import CommandConfig


EVAL_COLUMNS = ("metric", "threshold", "value", "tpr", "tnr", "prevalence", "auc")
SWEEP_COLUMNS = ("metric", "tilde_delta", "delta", "value", "tpr", "tnr")
ROC_COLUMNS = ("threshold", "fpr", "tpr", "precision")
PR_COLUMNS = ("threshold", "one_minus_precision", "tpr", "precision")
POINT_COLUMNS = ("metric", "tilde_delta", "fpr", "tpr", "precision", "one_minus_precision")


def _parse_counts(raw: str) -> ConfusionCounts:
    try:
        values = [int(item) for item in raw.split(",")]
    except ValueError:
        raise UsageError("--counts must be four integers n11,n10,n01,n00") from None
    if len(values) != 4:
        raise UsageError("--counts must be four integers n11,n10,n01,n00")
    return ConfusionCounts(*values)


def _emit(cfg: CommandConfig, title: str, columns, rows) -> None:
    show_table(title, columns, rows, cfg.digits)
    if cfg.out:
        show_written(str(write_csv(cfg.out, columns, rows)))


def run_eval(cfg: CommandConfig) -> None:
    """Metric value at a regression threshold, or from confusion counts."""
    spec = cfg.metric()

    if cfg.get("counts") is not None:
        triple = triple_from_counts(_parse_counts(cfg.get("counts")))
        threshold = auc = None
    else:
        scores = load_scores(cfg.require("scores"))
        scores.require_both_labels()
        threshold = cfg.get("threshold", 0.5)
        triple = triple_from_counts(confusion_at(scores, threshold))
        auc = roc_auc(scores)

    row = (
        spec.label,
        threshold,
        metric_value(spec, triple),
        triple.tpr,
        triple.tnr,
        triple.prev,
        auc,
    )
    _emit(cfg, "Metric value", EVAL_COLUMNS, [row])


def run_sweep(cfg: CommandConfig) -> None:
    """Grid-optimal thresholds, or the full threshold table with --full."""
    scores = load_scores(cfg.require("scores"))
    specs = cfg.metrics()
    grid = cfg.grid()

    if cfg.get("full"):
        found = [row for spec in specs for row in sweep_table(scores, spec, grid)]
    else:
        with console.status("[cyan]Optimizing thresholds...[/cyan]"):
            found = [grid_optimize(scores, spec, grid) for spec in specs]

    rows = [
        (r.metric, r.tilde_delta, r.delta_density, r.metric_value, r.tpr, r.tnr)
        for r in found
    ]
    _emit(cfg, f"Thresholds (prevalence {scores.prevalence:.4g})", SWEEP_COLUMNS, rows)


def run_roc(cfg: CommandConfig) -> None:
    """Curve files and, with --metrics, the metric-optimal points."""
    scores = load_scores(cfg.require("scores"))
    roc = roc_curve(scores)
    auc = roc_auc(scores)

    show_table(
        "ROC summary",
        ("samples", "prevalence", "points", "auc"),
        [(len(scores), scores.prevalence, len(roc), auc)],
        cfg.digits,
    )
    if cfg.out:
        rows = [(p.threshold, p.fpr, p.tpr, p.precision) for p in roc]
        show_written(str(write_csv(cfg.out, ROC_COLUMNS, rows)))

    if cfg.get("pr_out"):
        pr = recall_vs_one_minus_precision(scores)
        rows = [(p.threshold, p.one_minus_precision, p.tpr, p.precision) for p in pr]
        show_written(str(write_csv(cfg.get("pr_out"), PR_COLUMNS, rows)))

    if cfg.get("metrics"):
        points = optimal_points(scores, cfg.metrics(), cfg.grid())
        rows = [
            (
                o.spec.label,
                o.row.tilde_delta,
                o.point.fpr,
                o.point.tpr,
                o.point.precision,
                o.point.one_minus_precision,
            )
            for o in points
        ]
        show_table("Optimal points", POINT_COLUMNS, rows, cfg.digits)
        if cfg.get("points_out"):
            show_written(str(write_csv(cfg.get("points_out"), POINT_COLUMNS, rows)))
    elif cfg.get("points_out"):
        raise UsageError("--points-out needs --metrics")
