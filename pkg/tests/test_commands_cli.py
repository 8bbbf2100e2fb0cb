"""End-to-end tests for the command-line entry point."""

import csv
from pathlib import Path
from unittest.mock import patch

import pytest

from main import main


def _read(path: Path) -> list[dict[str, str]]:
    with path.open(encoding="utf-8", newline="") as handle:
        return list(csv.DictReader(handle))


@pytest.fixture(autouse=True)
def no_initialize():
    """Keep the CLI from reconfiguring logging or reading .env during tests."""
    with patch("main.initialize"):
        yield


class TestParser:
    """Tests for build_parser and CommandConfig.from_namespace."""

    def test_eval_requires_input(self):
        """Should require one of --scores and --counts."""
        from commands import build_parser
        from utils.errors import UsageError

        with pytest.raises(UsageError):
            build_parser().parse_args(["eval", "--metric", "mcc"])

    def test_rejects_zero_digits(self):
        """Should refuse --digits below 1."""
        from commands import CommandConfig, build_parser
        from utils.errors import UsageError

        args = build_parser().parse_args(["eval", "--counts", "1,1,1,1", "--metric", "mcc", "--digits", "0"])
        with pytest.raises(UsageError, match="digits"):
            CommandConfig.from_namespace(args)

    def test_solver_overrides(self):
        """Should pass solver flags through to SolverOptions."""
        from commands import CommandConfig, build_parser

        args = build_parser().parse_args(
            ["solve-lda", "--delta-mahalanobis", "1", "--metric", "jac", "--pi", "0.1", "--grid-points", "64"]
        )
        opts = CommandConfig.from_namespace(args).solver_options()
        assert opts.grid_points == 64
        assert not opts.accelerate


class TestExitCodes:
    """Tests for main's exit codes."""

    def test_unknown_subcommand(self, capsys):
        """Should exit 1 with a usage error."""
        assert main(["bogus"]) == 1
        assert "imbametric: usage error:" in capsys.readouterr().err

    def test_missing_scores_file(self, tmp_path: Path, capsys):
        """Should exit 2 when the score file is missing."""
        assert main(["roc", "--scores", str(tmp_path / "missing.csv")]) == 2
        assert "imbametric: data error:" in capsys.readouterr().err

    def test_wrong_count_arity(self):
        """Should exit 1 unless four counts are given."""
        assert main(["eval", "--counts", "1,2,3", "--metric", "mcc"]) == 1

    def test_empty_confusion(self):
        """Should exit 2 for an all-zero confusion matrix."""
        assert main(["eval", "--counts", "0,0,0,0", "--metric", "mcc"]) == 2

    def test_invalid_metric_parameters(self, capsys):
        """Should exit 1 for metric parameters violating their constraints."""
        assert main(["eval", "--counts", "1,1,1,1", "--metric", "frb:c=-1:d0=0.1:d1=1"]) == 1
        assert "usage error" in capsys.readouterr().err

    def test_no_fixed_point(self):
        """Should exit 3 when the solver finds no root."""
        code = main(
            ["solve-lda", "--delta-mahalanobis", "1", "--metric", "bacc", "--pi", "0.1",
             "--delta-min", "10", "--delta-max", "100"]
        )
        assert code == 3


class TestEval:
    """Tests for the eval subcommand."""

    def test_counts(self, tmp_path: Path):
        """Should evaluate a metric on confusion counts."""
        out = tmp_path / "eval.csv"
        assert main(["eval", "--counts", "2640,360,1352,5648", "--metric", "f1.5", "--out", str(out)]) == 0
        [row] = _read(out)
        assert row["metric"] == "F1.5"
        assert float(row["value"]) == pytest.approx(0.7987, abs=5e-3)
        assert row["threshold"] == ""
        assert row["auc"] == ""

    def test_scores(self, scores_csv: Path, tmp_path: Path):
        """Should evaluate at the default threshold and report the AUC."""
        out = tmp_path / "eval.csv"
        assert main(["eval", "--scores", str(scores_csv), "--metric", "jac", "--out", str(out)]) == 0
        [row] = _read(out)
        assert float(row["threshold"]) == 0.5
        # Counts (2, 1, 1, 2): Jaccard 2 / 4
        assert float(row["value"]) == pytest.approx(0.5)
        assert float(row["auc"]) == pytest.approx(8 / 9)


class TestSweep:
    """Tests for the sweep subcommand."""

    def test_grid_optimum(self, scores_csv: Path, tmp_path: Path):
        """Should report one grid optimum per metric."""
        out = tmp_path / "sweep.csv"
        assert main(["sweep", "--scores", str(scores_csv), "--metrics", "jac,mcc", "--out", str(out)]) == 0
        rows = _read(out)
        assert [r["metric"] for r in rows] == ["JAC", "MCC"]
        assert float(rows[0]["tilde_delta"]) == pytest.approx(0.301)

    def test_full_table(self, scores_csv: Path, tmp_path: Path):
        """Should emit every grid threshold with --full."""
        out = tmp_path / "full.csv"
        code = main(
            ["sweep", "--scores", str(scores_csv), "--metrics", "jac", "--full",
             "--grid-step", "0.1", "--grid-start", "0.1", "--grid-stop", "0.9", "--out", str(out)]
        )
        assert code == 0
        assert len(_read(out)) == 9


class TestSolve:
    """Tests for the solve-lda, solve-qda and sweep-pi subcommands."""

    def test_solve_lda(self, tmp_path: Path):
        """Should write the optimal density-ratio threshold."""
        out = tmp_path / "solve.csv"
        code = main(
            ["solve-lda", "--delta-mahalanobis", "1", "--metric", "jac", "--pi", "0.1", "--out", str(out)]
        )
        assert code == 0
        [row] = _read(out)
        assert float(row["delta_star"]) == pytest.approx(1.86, rel=1e-2)
        assert row["model"] == "LDA(Δ=1)"

    def test_solve_lda_from_scenario(self, lda_scenario_json: Path, tmp_path: Path):
        """Should read the Mahalanobis distance from a scenario file."""
        out = tmp_path / "solve.csv"
        code = main(
            ["solve-lda", "--scenario", str(lda_scenario_json), "--metric", "f1.5",
             "--pi", "0.01,0.1", "--out", str(out)]
        )
        assert code == 0
        assert [float(r["delta_star"]) for r in _read(out)] == pytest.approx([11.5, 2.19], rel=1e-2)

    def test_solve_qda_rejects_bad_scenario(self, tmp_path: Path):
        """Should exit 2 for an unreadable scenario."""
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["solve-qda", "--scenario", str(path), "--metric", "mcc", "--pi", "0.1"]) == 2

    def test_sweep_pi_records_failures(self, tmp_path: Path):
        """Should keep going past an invalid prevalence and report it."""
        out = tmp_path / "sweep_pi.csv"
        code = main(
            ["sweep-pi", "--delta-mahalanobis", "1", "--metric", "jac",
             "--pi-grid", "0.1,1.5", "--out", str(out)]
        )
        assert code == 0
        good, bad = _read(out)
        assert float(good["delta_star"]) == pytest.approx(1.86, rel=1e-2)
        assert good["error"] == ""
        assert bad["delta_star"] == ""
        assert bad["error"] != ""

    def test_byte_identical_output(self, tmp_path: Path):
        """Should write identical files for identical runs."""
        args = ["solve-lda", "--delta-mahalanobis", "1,2", "--metric", "mcc", "--pi", "0.001,0.1"]
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(args + ["--out", str(first)]) == 0
        assert main(args + ["--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()


class TestRoc:
    """Tests for the roc subcommand."""

    def test_curve_files(self, scores_csv: Path, tmp_path: Path):
        """Should write both curves."""
        roc, pr = tmp_path / "roc.csv", tmp_path / "pr.csv"
        code = main(["roc", "--scores", str(scores_csv), "--out", str(roc), "--pr-out", str(pr)])
        assert code == 0
        assert len(roc.read_text(encoding="utf-8").splitlines()) == 8
        assert len(pr.read_text(encoding="utf-8").splitlines()) == 7

    def test_optimal_points(self, scores_csv: Path, tmp_path: Path):
        """Should locate metric optima on the curves."""
        points = tmp_path / "points.csv"
        code = main(
            ["roc", "--scores", str(scores_csv), "--metrics", "jac", "--points-out", str(points)]
        )
        assert code == 0
        [row] = _read(points)
        assert float(row["fpr"]) == pytest.approx(1 / 3)
        assert float(row["one_minus_precision"]) == pytest.approx(0.25)

    def test_points_out_needs_metrics(self, scores_csv: Path, tmp_path: Path):
        """Should exit 1 for --points-out without --metrics."""
        code = main(["roc", "--scores", str(scores_csv), "--points-out", str(tmp_path / "p.csv")])
        assert code == 1


class TestSimulate:
    """Tests for the simulate subcommand."""

    def test_report(self, sim_config_json: Path, tmp_path: Path):
        """Should write one row per metric."""
        out = tmp_path / "report.csv"
        assert main(["simulate", "--config", str(sim_config_json), "--out", str(out)]) == 0
        assert [r["metric"] for r in _read(out)] == ["F1.5", "MCC", "F0.5"]

    def test_missing_config(self, tmp_path: Path):
        """Should exit 2 for a missing config file."""
        assert main(["simulate", "--config", str(tmp_path / "none.json")]) == 2


class TestErrorLine:
    """Tests for the single-line error contract."""

    def test_long_path_single_line(self, tmp_path: Path, capsys):
        """Should report a long missing path on exactly one stderr line."""
        missing = tmp_path / ("x" * 120) / "scores.csv"
        assert main(["roc", "--scores", str(missing)]) == 2
        err = capsys.readouterr().err
        assert err.count("\n") == 1
        assert err.startswith("imbametric: data error:")
        assert str(missing) in err
