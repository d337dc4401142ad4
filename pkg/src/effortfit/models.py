"""COCOMO-family effort models.

=========  ==========================  ==============
model      effort                      coefficients
=========  ==========================  ==============
basic      a*KLOC^b                    a, b
model1     a*KLOC^b + c*ME             a, b, c
model2     a*KLOC^b + c*ME + d         a, b, c, d
=========  ==========================  ==============

KLOC^b is computed as exp(b*ln(KLOC)). Predictions are not clamped, so a
fitted c or d may drive an estimate negative.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from effortfit._purepy import BASIC, MODEL_I, MODEL_II
from effortfit.dataset import Dataset, ProjectRecord
from effortfit.optimizers import Objective, SearchSpace

__all__ = [
    "ModelSpec",
    "EvaluationError",
    "check_parameters",
    "predict",
    "predict_all",
    "default_search_space",
    "TrainingMAE",
]

COEFFICIENT_NAMES = ("a", "b", "c", "d")

# The unconstrained training-MAE optimum of the basic model on the NASA
# training split sits near a=1.52, b=0.99, well inside these bounds.
DEFAULT_BOUNDS = {
    "a": (0.0, 10.0),
    "b": (0.01, 2.0),
    "c": (-5.0, 5.0),
    "d": (-20.0, 20.0),
}


class EvaluationError(ArithmeticError):
    pass


class ModelSpec(enum.Enum):
    BASIC = "basic"
    MODEL_I = "model1"
    MODEL_II = "model2"

    @property
    def dimension(self) -> int:
        return {"basic": 2, "model1": 3, "model2": 4}[self.value]

    @property
    def code(self) -> int:
        return {"basic": BASIC, "model1": MODEL_I, "model2": MODEL_II}[self.value]

    @property
    def coefficient_names(self) -> tuple[str, ...]:
        return COEFFICIENT_NAMES[:self.dimension]

    @property
    def label(self) -> str:
        return {"basic": "Basic COCOMO", "model1": "Model I", "model2": "Model II"}[self.value]

    @classmethod
    def parse(cls, text) -> ModelSpec:
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower().replace("_", "").replace("-", "").replace(" ", "")
        aliases = {"basic": cls.BASIC, "cocomo": cls.BASIC,
                   "model1": cls.MODEL_I, "modeli": cls.MODEL_I,
                   "model2": cls.MODEL_II, "modelii": cls.MODEL_II}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown model {text!r}; expected basic, model1 or model2") from None


def check_parameters(spec: ModelSpec, p) -> tuple[float, ...]:
    """Validate a coefficient vector (a, b[, c[, d]]) for ``spec``."""
    values = tuple(float(v) for v in np.ravel(np.asarray(p, dtype=float)))
    if len(values) != spec.dimension:
        raise ValueError(
            f"{spec.value} takes {spec.dimension} coefficients "
            f"({', '.join(spec.coefficient_names)}), got {len(values)}")
    if not all(math.isfinite(v) for v in values):
        raise ValueError(f"coefficients must be finite, got {values}")
    return values


def _predict(spec, values, kloc, me):
    try:
        e = values[0] * math.exp(values[1] * math.log(kloc))
    except OverflowError:
        return math.inf
    if spec is not ModelSpec.BASIC:
        e = e + values[2] * me
    if spec is ModelSpec.MODEL_II:
        e = e + values[3]
    return e


def predict(spec: ModelSpec, p, r: ProjectRecord) -> float:
    """Estimated effort (person-months) for one project."""
    values = check_parameters(spec, p)
    if r.kloc <= 0:
        raise ValueError(f"project {r.id}: kloc must be > 0")
    e = _predict(spec, values, r.kloc, r.me)
    if not math.isfinite(e):
        raise EvaluationError(f"project {r.id}: prediction is not finite for coefficients {values}")
    return e


def predict_all(spec: ModelSpec, p, d: Dataset) -> np.ndarray:
    values = check_parameters(spec, p)
    out = np.empty(len(d))
    for i, r in enumerate(d.records):
        e = _predict(spec, values, r.kloc, r.me)
        if not math.isfinite(e):
            raise EvaluationError(
                f"project {r.id}: prediction is not finite for coefficients {values}")
        out[i] = e
    return out


def default_search_space(spec: ModelSpec) -> SearchSpace:
    names = spec.coefficient_names
    return SearchSpace(
        tuple(DEFAULT_BOUNDS[n][0] for n in names),
        tuple(DEFAULT_BOUNDS[n][1] for n in names),
        names,
    )


class TrainingMAE(Objective):
    """Mean absolute error of a model on a dataset, as a function of its coefficients.

    Evaluated inside the compiled kernels when they are available.
    """

    def __init__(self, spec: ModelSpec, data: Dataset):
        super().__init__(None, spec.dimension)
        self.spec = spec
        self.data = data
        log_kloc = np.array([math.log(r.kloc) for r in data.records])
        self.native = (spec.code, log_kloc, data.me, data.effort)
