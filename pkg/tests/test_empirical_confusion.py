"""Tests for empirical confusion matrices and grid optimization."""

import math

import numpy as np
import pytest

from empirical import (
    GridSpec,
    ScoredSample,
    confusion_at,
    counts_on_grid,
    grid_optimize,
    sweep_table,
)
from metrics import (
    MCC,
    Accuracy,
    ConfusionCounts,
    FBeta,
    Jaccard,
    Kappa,
    RobustF,
    RobustMCC,
    metric_value,
    triple_from_counts,
)
from utils.errors import DegenerateMetricError, NumericError, UndefinedRateError, UsageError


class TestGridSpec:
    """Tests for GridSpec."""

    def test_default_grid(self):
        """Should span 0.001 to 0.999 in steps of 0.001."""
        values = GridSpec().values()
        assert len(values) == 999
        assert values[0] == 0.001
        assert values[-1] == 0.999
        assert values[299] == 0.3

    def test_custom_grid(self):
        """Should honour start, stop and step."""
        assert list(GridSpec(0.1, 0.5, 0.1).values()) == [0.1, 0.2, 0.3, 0.4, 0.5]

    @pytest.mark.parametrize(
        "kwargs", [{"start": 0.0}, {"stop": 1.0}, {"start": 0.6, "stop": 0.5}, {"step": 0.0}]
    )
    def test_rejects_invalid(self, kwargs):
        """Should reject grids outside (0, 1) or with a nonpositive step."""
        with pytest.raises(UsageError):
            GridSpec(**kwargs)


class TestConfusionAt:
    """Tests for confusion_at and counts_on_grid functions."""

    def test_six_samples(self, six_samples):
        """Should count predictions at threshold 0.5."""
        assert confusion_at(six_samples, 0.5) == ConfusionCounts(2, 1, 1, 2)

    def test_ties_predict_positive(self, six_samples):
        """Should classify a score equal to the threshold as positive."""
        assert confusion_at(six_samples, 0.7) == ConfusionCounts(2, 1, 1, 2)
        assert confusion_at(six_samples, 0.7000001) == ConfusionCounts(2, 1, 0, 3)

    def test_accepts_sample_iterables(self):
        """Should accept plain ScoredSample lists."""
        samples = [ScoredSample(0.9, 1), ScoredSample(0.2, 0)]
        assert confusion_at(samples, 0.5) == ConfusionCounts(1, 0, 0, 1)

    def test_grid_counts(self, six_samples):
        """Should return one table per threshold."""
        counts = counts_on_grid(six_samples, [0.05, 0.95])
        assert counts[0] == ConfusionCounts(3, 0, 3, 0)
        assert counts[1] == ConfusionCounts(0, 3, 0, 3)


class TestSweepTable:
    """Tests for sweep_table function."""

    def test_rows_cover_grid(self, six_samples):
        """Should give a row per grid threshold when the metric is defined."""
        rows = sweep_table(six_samples, Jaccard())
        assert len(rows) == 999
        assert [r.tilde_delta for r in rows] == sorted(r.tilde_delta for r in rows)

    def test_skips_degenerate_thresholds(self, six_samples):
        """Should skip thresholds where MCC has a zero denominator."""
        rows = sweep_table(six_samples, MCC())
        assert len(rows) == 800
        assert rows[0].tilde_delta == pytest.approx(0.101)

    def test_density_threshold(self, six_samples):
        """Should report the equivalent density-ratio threshold."""
        row = sweep_table(six_samples, Jaccard(), GridSpec(0.25, 0.25, 0.01))[0]
        # Sample prevalence 1/2: delta = tilde / (1 - tilde)
        assert row.delta_density == pytest.approx(1 / 3)

    def test_single_class(self):
        """Should raise when one label is missing."""
        samples = [ScoredSample(0.9, 1), ScoredSample(0.2, 1)]
        with pytest.raises(UndefinedRateError):
            sweep_table(samples, Jaccard())


class TestGridOptimize:
    """Tests for grid_optimize function."""

    def test_six_samples_jaccard(self, six_samples):
        """Should pick the smallest threshold of the best plateau."""
        best = grid_optimize(six_samples, Jaccard())
        assert best.tilde_delta == pytest.approx(0.301)
        assert best.metric_value == pytest.approx(0.75)
        assert (best.tpr, best.tnr) == pytest.approx((1.0, 2 / 3))
        assert best.metric == "JAC"

    def test_robust_metric(self, six_samples):
        """Should optimize robust metrics on the same grid."""
        best = grid_optimize(six_samples, RobustF(0.0, 0.1, 1.0))
        assert 0.0 < best.metric_value <= 1.0

    def test_all_degenerate(self):
        """Should raise when the metric is undefined on the whole grid."""
        samples = [ScoredSample(0.5, 1), ScoredSample(0.5, 0)]
        with pytest.raises(NumericError, match="degenerate"):
            grid_optimize(samples, MCC(), GridSpec(0.1, 0.9, 0.1))

    def test_matches_exhaustive_search(self):
        """Should equal a plain loop over the grid on random datasets."""
        specs = [Jaccard(), FBeta(1.5), MCC(), Kappa(), Accuracy(), RobustF(0.0, 0.1, 1.0), RobustMCC(0.05)]
        grid = GridSpec(0.005, 0.995, 0.005)
        thresholds = grid.values()
        rng = np.random.default_rng(20)
        for trial in range(100):
            n = int(rng.integers(10, 201))
            # Two decimals so that scores tie with each other and with grid thresholds
            scores = np.round(rng.uniform(size=n), 2)
            labels = (rng.uniform(size=n) < rng.uniform(0.05, 0.6)).astype(int)
            labels[:2] = (1, 0)
            samples = [ScoredSample(float(s), int(y)) for s, y in zip(scores, labels)]
            spec = specs[trial % len(specs)]

            expected_tilde, expected_value = None, -math.inf
            for tilde in thresholds:
                predicted = scores >= tilde
                counts = ConfusionCounts(
                    n11=int(np.sum(predicted & (labels == 1))),
                    n10=int(np.sum(~predicted & (labels == 1))),
                    n01=int(np.sum(predicted & (labels == 0))),
                    n00=int(np.sum(~predicted & (labels == 0))),
                )
                try:
                    value = metric_value(spec, triple_from_counts(counts))
                except DegenerateMetricError:
                    continue
                if value > expected_value:
                    expected_tilde, expected_value = float(tilde), value

            best = grid_optimize(samples, spec, grid)
            assert best.tilde_delta == expected_tilde
            assert best.metric_value == expected_value
