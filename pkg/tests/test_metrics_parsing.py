"""Tests for the text form of metric specifications."""

import pytest

from metrics import (
    MCC,
    FBeta,
    RobustF,
    RobustMCC,
    WeightedAccuracy,
    format_metric_spec,
    parse_metric_list,
    parse_metric_spec,
)
from utils.errors import MetricParameterError, UsageError


class TestParseMetricSpec:
    """Tests for parse_metric_spec function."""

    def test_plain_name(self):
        """Should parse parameterless metrics case-insensitively."""
        assert parse_metric_spec("mcc") == MCC()
        assert parse_metric_spec(" MCC ") == MCC()

    def test_f_beta_shorthand(self):
        """Should read the beta from the name."""
        assert parse_metric_spec("f1.5") == FBeta(1.5)
        assert parse_metric_spec("F0.5") == FBeta(0.5)

    def test_parameters(self):
        """Should parse key=value parameters."""
        assert parse_metric_spec("frb:c=0:d0=0.1:d1=1") == RobustF(0.0, 0.1, 1.0)
        assert parse_metric_spec("mccrb:d=0.05") == RobustMCC(0.05)
        assert parse_metric_spec("wacc:w=0.3") == WeightedAccuracy(0.3)

    def test_optional_beta(self):
        """Should accept the robust F normalizer beta."""
        assert parse_metric_spec("frb:c=0:d0=0.1:d1=1:beta=2").beta == 2.0

    def test_unknown_metric(self):
        """Should raise for unknown names."""
        with pytest.raises(UsageError, match="unknown metric"):
            parse_metric_spec("auc")

    def test_missing_parameter(self):
        """Should name the missing parameters."""
        with pytest.raises(UsageError, match="requires d1"):
            parse_metric_spec("frb:c=0:d0=0.1")

    def test_unknown_parameter(self):
        """Should reject parameters the family does not take."""
        with pytest.raises(UsageError, match="unknown parameter"):
            parse_metric_spec("mcc:d=1")

    def test_duplicate_parameter(self):
        """Should reject repeated keys."""
        with pytest.raises(UsageError, match="duplicate"):
            parse_metric_spec("mccrb:d=0.1:d=0.2")

    def test_non_numeric_value(self):
        """Should reject values that are not numbers."""
        with pytest.raises(UsageError, match="not a number"):
            parse_metric_spec("mccrb:d=small")

    def test_constraint_violation(self):
        """Should surface the violated constraint."""
        with pytest.raises(MetricParameterError, match="d0 must be positive"):
            parse_metric_spec("frb:c=0:d0=0:d1=1")


class TestFormatMetricSpec:
    """Tests for format_metric_spec function."""

    def test_formats_exact_floats(self):
        """Should write parameters with repr floats."""
        assert format_metric_spec(RobustF(0.0, 0.1, 1.0)) == "frb:c=0.0:d0=0.1:d1=1.0"
        assert format_metric_spec(FBeta(1.5)) == "f1.5"

    def test_default_beta_omitted(self):
        """Should only write beta when it differs from the default."""
        assert "beta" not in format_metric_spec(RobustF(0.0, 0.1, 1.0))
        assert format_metric_spec(RobustF(0.0, 0.1, 1.0, beta=2.0)).endswith(":beta=2.0")

    @pytest.mark.parametrize(
        "spec",
        [MCC(), FBeta(0.1 + 0.2), RobustF(0.05, 0.1, 1.0, beta=1.5), RobustMCC(1e-3)],
        ids=lambda s: s.label,
    )
    def test_parse_inverts_format(self, spec):
        """Should give back an equal spec."""
        assert parse_metric_spec(format_metric_spec(spec)) == spec


class TestParseMetricList:
    """Tests for parse_metric_list function."""

    def test_list(self):
        """Should parse comma-separated specs in order."""
        assert parse_metric_list("f1.5,mcc,f0.5") == [FBeta(1.5), MCC(), FBeta(0.5)]

    def test_empty(self):
        """Should reject an empty list."""
        with pytest.raises(UsageError, match="empty"):
            parse_metric_list(" , ")
