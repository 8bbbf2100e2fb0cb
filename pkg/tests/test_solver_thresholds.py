"""Tests for threshold conversion between density ratio and regression function."""

import pytest

from solver import threshold_density_to_regression, threshold_regression_to_density
from utils.errors import DomainError


class TestThresholdDensityToRegression:
    """Tests for threshold_density_to_regression function."""

    @pytest.mark.parametrize(
        "delta,prev,expected",
        [(0.778, 0.3, 0.250), (10.878, 0.01, 0.099), (1.0, 0.5, 0.5)],
    )
    def test_examples(self, delta, prev, expected):
        """Should map density-ratio thresholds to regression thresholds."""
        assert threshold_density_to_regression(delta, prev) == pytest.approx(expected, abs=5e-4)

    def test_rejects_bad_prevalence(self):
        """Should reject prevalences outside (0, 1)."""
        with pytest.raises(DomainError):
            threshold_density_to_regression(1.0, 0.0)

    def test_rejects_bad_delta(self):
        """Should reject nonpositive and infinite thresholds."""
        with pytest.raises(DomainError):
            threshold_density_to_regression(0.0, 0.3)
        with pytest.raises(DomainError):
            threshold_density_to_regression(float("inf"), 0.3)


class TestThresholdRegressionToDensity:
    """Tests for threshold_regression_to_density function."""

    @pytest.mark.parametrize(
        "tilde,prev,expected",
        [(0.426, 0.3, 1.732), (0.318, 0.01, 46.16)],
    )
    def test_examples(self, tilde, prev, expected):
        """Should map regression thresholds to density-ratio thresholds."""
        assert threshold_regression_to_density(tilde, prev) == pytest.approx(expected, rel=1e-3)

    def test_rejects_bad_tilde(self):
        """Should reject thresholds outside (0, 1)."""
        with pytest.raises(DomainError):
            threshold_regression_to_density(1.0, 0.3)

    @pytest.mark.parametrize("prev", [1e-6, 0.01, 0.3, 0.9])
    def test_inverse(self, prev):
        """Should undo the forward conversion."""
        for delta in (1e-3, 0.5, 1.0, 7.0, 1e4):
            tilde = threshold_density_to_regression(delta, prev)
            assert threshold_regression_to_density(tilde, prev) == pytest.approx(delta, rel=1e-9)

    def test_balanced_prevalence_identity(self):
        """Should reduce to tilde / (1 - tilde) at prevalence one half."""
        assert threshold_regression_to_density(0.8, 0.5) == pytest.approx(4.0)
