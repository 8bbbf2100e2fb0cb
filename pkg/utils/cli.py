"""CLI display utilities."""

import logging
from typing import Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table


console = Console()
err_console = Console(stderr=True)


def configure_logging(level: str | int = "WARNING") -> None:
    """Route all loggers through a rich handler on stderr."""
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def format_cell(value: object, digits: int) -> str:
    """Render a table cell, rounding floats to the requested significant digits."""
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def show_table(
    title: str,
    columns: Sequence[str],
    rows: Sequence[Sequence[object]],
    digits: int = 4,
) -> None:
    """Print result rows as a rich table."""
    table = Table(title=title, title_style="bold cyan", header_style="bold")
    for column in columns:
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(*(format_cell(value, digits) for value in row))
    console.print(table)


def show_error(kind: str, message: str) -> None:
    """Print the single-line machine-parsable error message."""
    # No markup so metric labels like "[d=0.1]" survive; no wrapping keeps one line
    err_console.print(
        f"imbametric: {kind} error: {message}",
        markup=False,
        highlight=False,
        soft_wrap=True,
    )


def show_written(path: str) -> None:
    """Confirm an output file."""
    console.print(f"[green]✓[/green] wrote [dim]{path}[/dim]")
