"""Command routing and execution."""

import logging
from typing import Callable

from utils import show_error
from utils.errors import DataError, ImbametricError

from .config import CommandConfig
from .handlers import (
    run_eval,
    run_roc,
    run_simulate,
    run_solve_lda,
    run_solve_qda,
    run_sweep,
    run_sweep_pi,
)


logger = logging.getLogger(__name__)

# Registry mapping subcommand names to handler functions
COMMAND_HANDLERS: dict[str, Callable[[CommandConfig], None]] = {
    "eval": run_eval,
    "sweep": run_sweep,
    "solve-lda": run_solve_lda,
    "solve-qda": run_solve_qda,
    "sweep-pi": run_sweep_pi,
    "roc": run_roc,
    "simulate": run_simulate,
}


def run(cfg: CommandConfig) -> int:
    """
    Route a command to its handler.

    Args:
        cfg: Parsed command configuration

    Returns:
        Process exit code: 0 on success, 1 usage, 2 data, 3 numeric errors

    Raises:
        ValueError: If the subcommand is not recognized
    """
    if cfg.subcommand not in COMMAND_HANDLERS:
        raise ValueError(f"Unknown command: {cfg.subcommand}")

    try:
        COMMAND_HANDLERS[cfg.subcommand](cfg)
    except ImbametricError as e:
        show_error(e.kind, str(e))
        return e.exit_code
    except OSError as e:
        target = f"{e.filename}: " if e.filename else ""
        show_error(DataError.kind, f"{target}{e.strerror or e}")
        return DataError.exit_code
    except Exception as e:
        logger.debug("Unhandled error in %s", cfg.subcommand, exc_info=True)
        show_error("internal", f"{type(e).__name__}: {e}")
        return 1
    return 0
