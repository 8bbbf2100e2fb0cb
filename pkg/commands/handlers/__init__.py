from .empirical import run_eval, run_roc, run_sweep
from .simulate import run_simulate
from .solve import run_solve_lda, run_solve_qda, run_sweep_pi

__all__ = [
    "run_eval",
    "run_roc",
    "run_sweep",
    "run_simulate",
    "run_solve_lda",
    "run_solve_qda",
    "run_sweep_pi",
]
