"""Handler for the simulate command."""

from simulation import REPORT_COLUMNS, load_sim_config, run_experiment
from utils import console, show_table, show_written, write_csv

from ..config import CommandConfig


def run_simulate(cfg: CommandConfig) -> None:
    """Run a simulation config and report the grid-optimal thresholds per cell."""
    sim = load_sim_config(cfg.require("config"))
    cells = len(sim.prevalences) or 1

    with console.status(f"[cyan]Simulating {cells} cell(s)...[/cyan]"):
        report = run_experiment(sim)

    rows = [row.as_tuple() for row in report.rows]
    show_table("Simulation report", REPORT_COLUMNS, rows, cfg.digits)
    if cfg.out:
        show_written(str(write_csv(cfg.out, REPORT_COLUMNS, rows)))

    for cell in report.cells:
        if not cell.fit.converged:
            console.print(
                f"[yellow]Warning:[/yellow] prevalence {cell.prevalence:.4g}: "
                f"{cell.fit.diagnostic}"
            )
