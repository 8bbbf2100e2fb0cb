"""Simulation experiments: sample, fit, score, optimize thresholds."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Sequence

from empirical import ScoreSet, grid_optimize
from utils.env import max_threads
from utils.errors import ScenarioError

from .config import SimConfig, cell_sizes
from .logistic import LogisticFit, fit_logistic
from .sampling import sample_scenario


logger = logging.getLogger(__name__)

REPORT_COLUMNS = ("metric", "prevalence", "value", "tilde_delta", "tpr", "tnr", "delta")


@dataclass(frozen=True)
class ReportRow:
    """Grid-optimal threshold of one metric in one cell."""

    metric: str
    prevalence: float
    value: float
    tilde_delta: float
    tpr: float
    tnr: float
    delta: float

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, column) for column in REPORT_COLUMNS)


@dataclass(frozen=True)
class CellResult:
    prevalence: float
    fit: LogisticFit
    rows: tuple[ReportRow, ...]


@dataclass(frozen=True)
class ExperimentReport:
    cells: tuple[CellResult, ...]

    @property
    def rows(self) -> list[ReportRow]:
        return [row for cell in self.cells for row in cell.rows]

    def row(self, metric: str, prevalence: float) -> ReportRow:
        """Look up the row of a metric label in the cell with the given prevalence."""
        for row in self.rows:
            if row.metric == metric and abs(row.prevalence - prevalence) < 1e-12:
                return row
        raise KeyError((metric, prevalence))


def run_cell(cfg: SimConfig, stream: int = 0) -> CellResult:
    """
    Run one cell: sample, fit logistic regression, score and grid-optimize.

    Scores are computed on the fitting sample, or on a fresh sample of the
    same size when cfg.holdout is set.
    """
    features, labels = sample_scenario(cfg, stream)
    fit = fit_logistic(features, labels)
    if not fit.converged:
        logger.warning(
            "Cell %d (prevalence %.4g): logistic fit not converged: %s",
            stream,
            cfg.prevalence,
            fit.diagnostic,
        )

    if cfg.holdout:
        features, labels = sample_scenario(cfg, stream, holdout=True)
    scores = ScoreSet(fit.predict(features), labels)

    rows = []
    for spec in cfg.metrics:
        best = grid_optimize(scores, spec, cfg.grid)
        rows.append(
            ReportRow(
                metric=spec.label,
                prevalence=cfg.prevalence,
                value=best.metric_value,
                tilde_delta=best.tilde_delta,
                tpr=best.tpr,
                tnr=best.tnr,
                delta=best.delta_density,
            )
        )
    return CellResult(prevalence=cfg.prevalence, fit=fit, rows=tuple(rows))


def run_experiment(cfg: SimConfig) -> ExperimentReport:
    """
    Run a config: a single cell, or one cell per prevalence for an imbalance study.

    Returns:
        Report with rows in cell order, then metric order
    """
    if cfg.prevalences:
        return run_imbalance_study(cfg, cfg.prevalences, cfg.total)
    return ExperimentReport(cells=(run_cell(cfg),))


def run_imbalance_study(
    cfg: SimConfig, prevalences: Sequence[float], total: int | None
) -> ExperimentReport:
    """
    One cell per sample prevalence with n1 = round(prevalence * total),
    clamped so that each class keeps at least two samples.

    Cells use independent random streams (seed, cell index) and run on a
    thread pool capped by IMBAMETRIC_THREADS; results keep the input order.
    """
    if total is None:
        raise ScenarioError("an imbalance study needs a total sample size")
    cells = []
    for prevalence in prevalences:
        n1, n0 = cell_sizes(prevalence, total)
        cells.append(replace(cfg, n1=n1, n0=n0, prevalences=(), total=None))

    workers = min(max_threads(), len(cells)) or 1
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(run_cell, cells, range(len(cells))))
    return ExperimentReport(cells=tuple(results))
