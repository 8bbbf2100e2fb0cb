"""Tests for the quadratic-discriminant rate model."""

import math

import numpy as np
import pytest
from scipy.stats import chi2, ncx2

from gaussian import (
    EXAMPLE_SCENARIO,
    SCENARIO_1,
    SCENARIO_2,
    GaussianScenario,
    LDARateModel,
    QDARateModel,
    monte_carlo_rates,
    qda_decompose,
    qda_rates,
)
from metrics import Jaccard, RobustF, RobustMCC, robustness_bound
from solver import SolverOptions, solve_fixed_point, sweep_delta_star
from utils.errors import DomainError, ScenarioError


class TestQdaDecompose:
    """Tests for qda_decompose function."""

    @pytest.mark.parametrize("scenario", [SCENARIO_1, SCENARIO_2, EXAMPLE_SCENARIO])
    @pytest.mark.parametrize("under_class", [0, 1])
    def test_reassembles(self, scenario, under_class):
        """Should reproduce the matrix from its eigendecomposition."""
        spec = qda_decompose(scenario, under_class)
        np.testing.assert_allclose(spec.reassemble(), spec.matrix, atol=1e-10)

    def test_one_dimensional_eigenvalue(self, one_dim_scenario):
        """Should give 1 - sigma1 / sigma0 under class 1."""
        spec = qda_decompose(one_dim_scenario, 1)
        np.testing.assert_allclose(spec.eigenvalues, [0.5])
        assert spec.constant == pytest.approx(math.log(2.0))

    def test_mixed_signs(self):
        """Should produce eigenvalues of both signs for the first scenario."""
        eigenvalues = qda_decompose(SCENARIO_1, 1).eigenvalues
        assert eigenvalues.min() < 0.0 < eigenvalues.max()

    def test_equal_covariance_is_linear(self):
        """Should route a shared covariance entirely to the normal term."""
        law = qda_decompose(EXAMPLE_SCENARIO, 1).law()
        assert law.weights == ()
        assert law.normal_sd == pytest.approx(2.0 * 2.0)

    def test_rejects_bad_class(self):
        """Should accept only class 0 or 1."""
        with pytest.raises(ScenarioError):
            qda_decompose(SCENARIO_1, 2)


class TestQDARateModel:
    """Tests for QDARateModel and qda_rates."""

    @pytest.mark.parametrize("delta", [0.05, 1.0, 3.0, 40.0])
    def test_matches_lda_for_shared_covariance(self, delta):
        """Should agree with the closed form when the covariances coincide."""
        qda = QDARateModel(EXAMPLE_SCENARIO).rates(delta)
        lda = LDARateModel(2.0).rates(delta)
        assert (qda.tpr, qda.tnr) == pytest.approx((lda.tpr, lda.tnr), abs=1e-12)

    @pytest.mark.parametrize("delta", [1e-20, 1e-6, 1e6, 1e20])
    def test_error_rates_keep_tail_precision(self, delta):
        """Should evaluate fnr and fpr directly instead of as 1 - tpr and 1 - tnr."""
        qda = QDARateModel(EXAMPLE_SCENARIO).rates(delta)
        lda = LDARateModel(2.0).rates(delta)
        assert qda.fnr == pytest.approx(lda.fnr, rel=1e-9)
        assert qda.fpr == pytest.approx(lda.fpr, rel=1e-9)
        assert min(qda.fnr, qda.fpr) > 0.0

    @pytest.mark.parametrize("delta", [0.5, 1.0, 1.2])
    def test_central_chi_square(self, one_dim_scenario, delta):
        """Should match chi-square probabilities in one dimension."""
        tpr, tnr = qda_rates(one_dim_scenario, delta)
        assert tpr == pytest.approx(chi2.cdf(2 * math.log(2) - 4 * math.log(delta), 1), abs=1e-6)
        assert tnr == pytest.approx(chi2.sf(math.log(2) - 2 * math.log(delta), 1), abs=1e-6)

    @pytest.mark.parametrize("delta", [0.5, 1.0, 2.0])
    def test_noncentral_chi_square(self, delta):
        """Should match noncentral chi-square probabilities in one dimension."""
        scenario = GaussianScenario(mu0=[0.0], mu1=[1.0], sigma0=[[2.0]], sigma1=[[1.0]])
        bound = 0.5 + math.log(2.0) - 2.0 * math.log(delta)
        tpr, _ = qda_rates(scenario, delta)
        assert tpr == pytest.approx(ncx2.cdf(2.0 * bound + 1.0, 1, 1.0), abs=1e-6)

    def test_monotone(self):
        """Should have tpr nonincreasing and tnr nondecreasing in delta."""
        model = QDARateModel(SCENARIO_1)
        rates = [model.rates(d) for d in np.geomspace(1e-3, 1e3, 25)]
        assert all(a.tpr >= b.tpr - 1e-7 and a.tnr <= b.tnr + 1e-7 for a, b in zip(rates, rates[1:]))

    def test_memoized(self):
        """Should evaluate each threshold once."""
        model = QDARateModel(SCENARIO_2)
        assert model.rates(2.0) is model.rates(2.0)

    def test_nonpositive_delta(self):
        """Should refuse thresholds outside (0, inf)."""
        with pytest.raises(DomainError):
            QDARateModel(SCENARIO_1).rates(-1.0)


@pytest.mark.slow
class TestQDAAgainstMonteCarlo:
    """Tests comparing exact QDA rates with simulated rates."""

    def test_rates_within_sampling_error(self):
        """Should agree with Monte-Carlo rates up to sampling noise."""
        deltas = np.geomspace(0.05, 50.0, 10)
        beyond_three = 0
        for scenario in (SCENARIO_1, SCENARIO_2):
            model = QDARateModel(scenario)
            for i, delta in enumerate(deltas):
                exact = model.rates(float(delta))
                simulated = monte_carlo_rates(scenario, float(delta), 200_000, seed=i)
                for value, estimate, se in (
                    (exact.tpr, simulated.tpr, simulated.tpr_se),
                    (exact.tnr, simulated.tnr, simulated.tnr_se),
                ):
                    z = abs(value - estimate) / se
                    assert z <= 5.0
                    beyond_three += z > 3.0
        assert beyond_three <= 2

    def test_solver_on_unequal_covariances(self):
        """Should solve the fixed point with quadrature-based rates."""
        opts = SolverOptions(grid_points=128, delta_min=1e-3, delta_max=1e4)
        result = solve_fixed_point(Jaccard(), QDARateModel(SCENARIO_1), 0.1, opts)
        assert result.residual <= 1e-8 * max(result.delta_star, 1.0)
        assert 0.0 < result.tpr < 1.0


@pytest.mark.slow
class TestQDARobustness:
    """Tests for bounded optimal thresholds of robust metrics under unequal covariances."""

    @pytest.mark.parametrize("scenario", [SCENARIO_1, SCENARIO_2], ids=["scenario1", "scenario2"])
    @pytest.mark.parametrize("spec", [RobustF(0.0, 0.1, 1.0), RobustMCC(0.1)], ids=lambda s: s.label)
    def test_bounded_over_prevalences(self, scenario, spec):
        """Should keep delta* below the robustness bound down to prevalence 1e-8."""
        bound = robustness_bound(spec)
        opts = SolverOptions(grid_points=128, delta_min=1e-3, delta_max=1e4)
        points = sweep_delta_star(spec, QDARateModel(scenario), list(np.geomspace(1e-8, 0.5, 50)), opts)
        assert all(p.error is None for p in points)
        assert max(p.result.delta_star for p in points) <= bound * (1 + 1e-9)
