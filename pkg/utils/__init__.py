from .cli import (
    console,
    err_console,
    configure_logging,
    show_table,
    show_error,
    show_written,
)
from .env import env_int, max_threads, mc_samples
from .errors import (
    ImbametricError,
    UsageError,
    DataError,
    NumericError,
)
from .initialization import initialize
from .io import format_number, write_csv

__all__ = [
    "console",
    "err_console",
    "configure_logging",
    "show_table",
    "show_error",
    "show_written",
    "env_int",
    "max_threads",
    "mc_samples",
    "ImbametricError",
    "UsageError",
    "DataError",
    "NumericError",
    "initialize",
    "format_number",
    "write_csv",
]
