"""Tests for scored samples and the score CSV reader."""

from pathlib import Path

import pytest

from empirical import ScoredSample, ScoreSet, load_scores
from utils.errors import DataError, UndefinedRateError


class TestScoredSample:
    """Tests for ScoredSample validation."""

    def test_rejects_score_out_of_range(self):
        """Should require scores in [0, 1]."""
        with pytest.raises(DataError):
            ScoredSample(1.5, 1)

    def test_rejects_bad_label(self):
        """Should require labels 0 or 1."""
        with pytest.raises(DataError):
            ScoredSample(0.5, 2)


class TestScoreSet:
    """Tests for ScoreSet."""

    def test_counts_and_prevalence(self, six_samples):
        """Should count each class."""
        assert len(six_samples) == 6
        assert (six_samples.positives, six_samples.negatives) == (3, 3)
        assert six_samples.prevalence == 0.5

    def test_sorted_class_scores(self, six_samples):
        """Should keep each class's scores sorted."""
        assert list(six_samples.positive_scores) == [0.4, 0.8, 0.9]
        assert list(six_samples.negative_scores) == [0.1, 0.3, 0.7]

    def test_read_only(self, six_samples):
        """Should freeze the arrays."""
        with pytest.raises(ValueError):
            six_samples.scores[0] = 0.0

    def test_from_samples(self):
        """Should build from ScoredSample items."""
        score_set = ScoreSet.from_samples([ScoredSample(0.2, 0), ScoredSample(0.8, 1)])
        assert score_set.prevalence == 0.5

    def test_require_both_labels(self):
        """Should raise when a class is missing."""
        with pytest.raises(UndefinedRateError):
            ScoreSet([0.1, 0.2], [0, 0]).require_both_labels()

    def test_rejects_empty(self):
        """Should refuse an empty set."""
        with pytest.raises(DataError, match="no samples"):
            ScoreSet([], [])


class TestLoadScores:
    """Tests for load_scores function."""

    def test_loads_csv(self, scores_csv: Path):
        """Should read score and label columns."""
        score_set = load_scores(scores_csv)
        assert len(score_set) == 6
        assert score_set.positives == 3

    def test_extra_columns(self, tmp_path: Path):
        """Should ignore columns other than score and label."""
        path = tmp_path / "extra.csv"
        path.write_text("id,label,score\na,1,0.9\nb,0,0.1\n", encoding="utf-8")
        assert load_scores(path).prevalence == 0.5

    def test_missing_file(self, tmp_path: Path):
        """Should raise DataError for unreadable files."""
        with pytest.raises(DataError, match="cannot read scores"):
            load_scores(tmp_path / "missing.csv")

    def test_bad_header(self, tmp_path: Path):
        """Should require the score and label columns."""
        path = tmp_path / "bad.csv"
        path.write_text("x,y\n0.5,1\n", encoding="utf-8")
        with pytest.raises(DataError, match="header"):
            load_scores(path)

    def test_bad_row(self, tmp_path: Path):
        """Should report the offending line."""
        path = tmp_path / "bad.csv"
        path.write_text("score,label\n0.5,1\nhigh,0\n", encoding="utf-8")
        with pytest.raises(DataError, match=":3:"):
            load_scores(path)

    def test_bad_label(self, tmp_path: Path):
        """Should reject labels other than 0 and 1."""
        path = tmp_path / "bad.csv"
        path.write_text("score,label\n0.5,1\n0.4,2\n", encoding="utf-8")
        with pytest.raises(DataError, match="labels"):
            load_scores(path)
