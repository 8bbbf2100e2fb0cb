from .config import SimConfig, load_sim_config, sim_config_from_dict
from .experiment import (
    REPORT_COLUMNS,
    CellResult,
    ExperimentReport,
    ReportRow,
    run_cell,
    run_experiment,
    run_imbalance_study,
)
from .logistic import LogisticFit, fit_logistic
from .sampling import sample_scenario

__all__ = [
    "SimConfig",
    "load_sim_config",
    "sim_config_from_dict",
    "REPORT_COLUMNS",
    "CellResult",
    "ExperimentReport",
    "ReportRow",
    "run_cell",
    "run_experiment",
    "run_imbalance_study",
    "LogisticFit",
    "fit_logistic",
    "sample_scenario",
]
