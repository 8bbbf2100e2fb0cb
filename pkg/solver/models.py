"""Rate models: classifier rates as functions of the density-ratio threshold."""

from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np

from metrics import RateTriple
from utils.errors import DataError, DomainError


@dataclass(frozen=True)
class ConditionalRates:
    """
    Class-conditional rates of the classifier predicting 1 when f1 >= delta * f0.

    fnr and fpr are the complements of tpr and tnr, evaluated directly where
    the model allows it.
    """

    tpr: float
    tnr: float
    fnr: float
    fpr: float

    @classmethod
    def from_rates(cls, tpr: float, tnr: float) -> "ConditionalRates":
        return cls(tpr=tpr, tnr=tnr, fnr=1.0 - tpr, fpr=1.0 - tnr)


class RateModel(Protocol):
    """Evaluator of (tpr, tnr) along the density-ratio threshold."""

    # tpr nonincreasing and tnr nondecreasing in delta
    monotone: bool
    # Search bounds (delta_lo, delta_hi)
    domain: tuple[float, float]

    def rates(self, delta: float) -> ConditionalRates: ...


def triple_at(model: RateModel, delta: float, prev: float) -> RateTriple:
    """Rate triple of the threshold classifier at delta for the given prevalence."""
    rates = model.rates(delta)
    return RateTriple(
        tpr=rates.tpr,
        tnr=rates.tnr,
        prev=prev,
        fnr=rates.fnr,
        fpr=rates.fpr,
    )


class TabulatedRateModel:
    """
    Rate model interpolated from a table of (delta, tpr, tnr).

    Rates are interpolated linearly in log(delta). Useful for rates estimated
    outside this package, e.g. by simulation.
    """

    def __init__(
        self,
        deltas: Sequence[float],
        tprs: Sequence[float],
        tnrs: Sequence[float],
    ):
        """
        Build the interpolation table.

        Raises:
            DataError: If the table is too short, unsorted or out of range
        """
        delta_arr = np.asarray(deltas, dtype=float)
        tpr_arr = np.asarray(tprs, dtype=float)
        tnr_arr = np.asarray(tnrs, dtype=float)

        if delta_arr.ndim != 1 or delta_arr.size < 2:
            raise DataError("rate table needs at least two thresholds")
        if tpr_arr.shape != delta_arr.shape or tnr_arr.shape != delta_arr.shape:
            raise DataError("rate table columns differ in length")
        if np.any(delta_arr <= 0) or np.any(np.diff(delta_arr) <= 0):
            raise DataError("rate table thresholds must be positive and increasing")
        for name, arr in (("tpr", tpr_arr), ("tnr", tnr_arr)):
            if np.any((arr < 0) | (arr > 1)):
                raise DataError(f"rate table {name} values outside [0, 1]")

        self._log_deltas = np.log(delta_arr)
        self._tprs = tpr_arr
        self._tnrs = tnr_arr
        self.domain = (float(delta_arr[0]), float(delta_arr[-1]))
        self.monotone = bool(
            np.all(np.diff(tpr_arr) <= 0) and np.all(np.diff(tnr_arr) >= 0)
        )

    def rates(self, delta: float) -> ConditionalRates:
        lo, hi = self.domain
        if not lo <= delta <= hi:
            raise DomainError(f"delta={delta!r} outside tabulated range [{lo}, {hi}]")
        x = np.log(delta)
        tpr = float(np.interp(x, self._log_deltas, self._tprs))
        tnr = float(np.interp(x, self._log_deltas, self._tnrs))
        return ConditionalRates.from_rates(tpr, tnr)
