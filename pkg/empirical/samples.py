"""Scored samples and the score CSV format."""

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from utils.errors import DataError, UndefinedRateError


SCORE_COLUMNS = ("score", "label")


@dataclass(frozen=True)
class ScoredSample:
    """An estimated regression-function value and the true label."""

    score: float
    label: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.score <= 1.0:
            raise DataError(f"score {self.score!r} outside [0, 1]")
        if self.label not in (0, 1):
            raise DataError(f"label {self.label!r} is not 0 or 1")


class ScoreSet:
    """Immutable array-backed collection of scored samples."""

    def __init__(self, scores: Iterable[float], labels: Iterable[int]):
        score_arr = np.array(scores, dtype=float).reshape(-1)
        label_arr = np.array(labels).reshape(-1)
        if score_arr.shape != label_arr.shape:
            raise DataError("scores and labels differ in length")
        if score_arr.size == 0:
            raise DataError("no samples")
        if not np.all((score_arr >= 0.0) & (score_arr <= 1.0)):
            raise DataError("scores must lie in [0, 1]")
        if not np.all((label_arr == 0) | (label_arr == 1)):
            raise DataError("labels must be 0 or 1")

        self.scores = score_arr
        self.labels = label_arr.astype(np.int8)
        self.scores.setflags(write=False)
        self.labels.setflags(write=False)

        mask = self.labels == 1
        self.positive_scores = np.sort(self.scores[mask])
        self.negative_scores = np.sort(self.scores[~mask])
        self.positive_scores.setflags(write=False)
        self.negative_scores.setflags(write=False)

    @classmethod
    def from_samples(cls, samples: Iterable[ScoredSample]) -> "ScoreSet":
        items = list(samples)
        return cls([s.score for s in items], [s.label for s in items])

    def __len__(self) -> int:
        return int(self.scores.size)

    @property
    def positives(self) -> int:
        return int(self.positive_scores.size)

    @property
    def negatives(self) -> int:
        return int(self.negative_scores.size)

    @property
    def prevalence(self) -> float:
        """Sample prevalence: share of label 1."""
        return self.positives / len(self)

    def require_both_labels(self) -> None:
        if self.positives == 0 or self.negatives == 0:
            raise UndefinedRateError(
                "undefined conditional rate: samples must contain both labels"
            )


Samples = Union[ScoreSet, Iterable[ScoredSample]]


def as_score_set(samples: Samples) -> ScoreSet:
    """Accept a ScoreSet or any iterable of ScoredSample."""
    if isinstance(samples, ScoreSet):
        return samples
    return ScoreSet.from_samples(samples)


def load_scores(path: str | Path) -> ScoreSet:
    """
    Read a score CSV with header `score,label`.

    Raises:
        DataError: If the file is missing, malformed or holds invalid values
    """
    scores: list[float] = []
    labels: list[int] = []
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            reader = csv.DictReader(handle)
            if reader.fieldnames is None or not set(SCORE_COLUMNS) <= set(reader.fieldnames):
                raise DataError(f"{path}: header must contain 'score,label'")
            for line, row in enumerate(reader, start=2):
                try:
                    score = float(row["score"])
                    label = int(row["label"])
                except (TypeError, ValueError) as e:
                    raise DataError(f"{path}:{line}: invalid row {row!r}") from e
                scores.append(score)
                labels.append(label)
    except OSError as e:
        raise DataError(f"cannot read scores {path}: {e.strerror or e}") from e

    return ScoreSet(scores, labels)
