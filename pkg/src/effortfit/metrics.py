"""Error measures for effort predictions.

All functions take ``(actual, predicted)`` vectors of equal, non-zero length.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields

import numpy as np

from effortfit.models import ModelSpec, predict_all

__all__ = [
    "MetricError",
    "MetricsReport",
    "mse",
    "mae",
    "mmre",
    "rmse",
    "vaf",
    "r_squared",
    "evaluate",
    "METRIC_NAMES",
]

METRIC_NAMES = ("vaf", "mse", "mae", "mmre", "rmse", "r2")


class MetricError(ValueError):
    pass


def _pair(actual, predicted, min_len=1):
    y = np.asarray(actual, dtype=float).ravel()
    yhat = np.asarray(predicted, dtype=float).ravel()
    if y.shape != yhat.shape:
        raise MetricError(f"length mismatch: {y.size} actual vs {yhat.size} predicted")
    if y.size < min_len:
        raise MetricError(f"need at least {min_len} value(s), got {y.size}")
    return y, yhat


def _finite(name, value):
    value = float(value)
    if not math.isfinite(value):
        raise MetricError(f"{name} is not finite (predictions too large?)")
    return value


def _total_variance(y):
    if np.all(y == y[0]):
        raise MetricError("actual values are constant (zero variance)")


def mse(actual, predicted) -> float:
    y, yhat = _pair(actual, predicted)
    with np.errstate(over="ignore", invalid="ignore"):
        return _finite("mse", np.mean((y - yhat) ** 2))


def mae(actual, predicted) -> float:
    y, yhat = _pair(actual, predicted)
    with np.errstate(over="ignore", invalid="ignore"):
        return _finite("mae", np.mean(np.abs(y - yhat)))


def mmre(actual, predicted) -> float:
    """Mean magnitude of relative error, mean(|y - yhat| / y)."""
    y, yhat = _pair(actual, predicted)
    zero = np.flatnonzero(y == 0)
    if zero.size:
        raise MetricError(f"actual value at index {zero[0]} is zero; relative error undefined")
    with np.errstate(over="ignore", invalid="ignore"):
        return _finite("mmre", np.mean(np.abs(y - yhat) / y))


def rmse(actual, predicted) -> float:
    return math.sqrt(mse(actual, predicted))


def vaf(actual, predicted) -> float:
    """Variance accounted for, in percent. Uses population variance."""
    y, yhat = _pair(actual, predicted, min_len=2)
    _total_variance(y)
    with np.errstate(over="ignore", invalid="ignore"):
        return _finite("vaf", (1.0 - np.var(y - yhat) / np.var(y)) * 100.0)


def r_squared(actual, predicted) -> float:
    """Coefficient of determination 1 - SS_res / SS_tot. Not floored at zero."""
    y, yhat = _pair(actual, predicted, min_len=2)
    _total_variance(y)
    with np.errstate(over="ignore", invalid="ignore"):
        ss_res = np.sum((y - yhat) ** 2)
        ss_tot = np.sum((y - y.mean()) ** 2)
        return _finite("r2", 1.0 - ss_res / ss_tot)


@dataclass(frozen=True)
class MetricsReport:
    vaf: float
    mse: float
    mae: float
    mmre: float
    rmse: float
    r2: float

    @classmethod
    def from_predictions(cls, actual, predicted) -> MetricsReport:
        return cls(
            vaf=vaf(actual, predicted),
            mse=mse(actual, predicted),
            mae=mae(actual, predicted),
            mmre=mmre(actual, predicted),
            rmse=rmse(actual, predicted),
            r2=r_squared(actual, predicted),
        )

    @classmethod
    def mean(cls, reports) -> MetricsReport:
        reports = list(reports)
        if not reports:
            raise ValueError("cannot average zero reports")
        return cls(**{f.name: float(np.mean([getattr(r, f.name) for r in reports]))
                      for f in fields(cls)})

    def as_dict(self) -> dict:
        return asdict(self)


def evaluate(spec: ModelSpec, p, d) -> MetricsReport:
    """All six measures for coefficients ``p`` on dataset ``d``."""
    return MetricsReport.from_predictions(d.effort, predict_all(spec, p, d))
