from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from effortfit import _backend
from effortfit._purepy import SPHERE


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned box ``lower[k] <= x[k] <= upper[k]``."""

    lower: tuple[float, ...]
    upper: tuple[float, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        lower = tuple(float(v) for v in self.lower)
        upper = tuple(float(v) for v in self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if len(lower) != len(upper):
            raise ValueError(f"lower has {len(lower)} entries, upper has {len(upper)}")
        if not lower:
            raise ValueError("search space needs at least one dimension")
        for k, (lo, hi) in enumerate(zip(lower, upper)):
            if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
                raise ValueError(f"dimension {k}: need finite lower < upper, got [{lo}, {hi}]")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != len(lower):
                raise ValueError("names must match the dimension")
            object.__setattr__(self, "names", names)

    @property
    def dimension(self) -> int:
        return len(self.lower)

    @property
    def lower_array(self) -> np.ndarray:
        return np.array(self.lower)

    @property
    def upper_array(self) -> np.ndarray:
        return np.array(self.upper)

    @property
    def width(self) -> np.ndarray:
        return self.upper_array - self.lower_array

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower_array) and np.all(x <= self.upper_array))

    def clip(self, x) -> np.ndarray:
        return np.clip(x, self.lower_array, self.upper_array)

    def uniform(self, rng, n) -> np.ndarray:
        return self.lower_array + rng.random((n, self.dimension)) * self.width

    def with_bounds(self, overrides) -> SearchSpace:
        """Copy with some dimensions re-bounded; ``overrides`` maps name or index to (lo, hi)."""
        lower, upper = list(self.lower), list(self.upper)
        for key, (lo, hi) in overrides.items():
            if isinstance(key, str):
                if self.names is None or key not in self.names:
                    raise KeyError(f"no dimension named {key!r}")
                k = self.names.index(key)
            else:
                k = int(key)
            lower[k], upper[k] = lo, hi
        return SearchSpace(tuple(lower), tuple(upper), self.names)


def finite_or_inf(value) -> float:
    value = float(value)
    return value if math.isfinite(value) else math.inf


class Objective:
    """A score to minimise over a box, plus its dimension.

    Plain callables are wrapped by ``as_objective``. Subclasses that set
    ``native`` to ``(code, log_kloc, me, effort)`` are evaluated inside the
    compiled kernels instead of through Python calls.
    """

    native = None

    def __init__(self, func, dimension):
        self.func = func
        self.dimension = int(dimension)

    def __call__(self, x) -> float:
        if self.native is not None:
            return _backend.kernels().native_eval(self.native[0], np.asarray(x, dtype=float), *self.native[1:])
        try:
            return finite_or_inf(self.func(np.array(x, dtype=float)))
        except (OverflowError, FloatingPointError, ZeroDivisionError):
            return math.inf

    def batch(self, positions) -> np.ndarray:
        positions = np.ascontiguousarray(positions, dtype=float)
        if self.native is not None:
            return np.asarray(_backend.kernels().evaluate_batch(self.native, positions))
        return np.array([self(x) for x in positions], dtype=float)


class Sphere(Objective):
    """``sum(x**2)``, evaluated natively."""

    def __init__(self, dimension):
        super().__init__(None, dimension)
        empty = np.zeros(0)
        self.native = (SPHERE, empty, empty, empty)


def as_objective(obj, space: SearchSpace) -> Objective:
    if not isinstance(obj, Objective):
        obj = Objective(obj, space.dimension)
    if obj.dimension != space.dimension:
        raise ValueError(
            f"objective dimension {obj.dimension} != search space dimension {space.dimension}")
    return obj


@dataclass
class OptimizationResult:
    best_position: np.ndarray
    best_score: float
    trace: np.ndarray
    evaluations: int
    algorithm: str = ""
    seed: int | None = None
    extra: dict = field(default_factory=dict)


def distance(x, y) -> float:
    """Euclidean distance between two points."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return float(np.sqrt(np.sum((x - y) ** 2)))


def attractiveness(r, beta0=1.0, betamin=1.0, gamma=0.4, kernel="gaussian") -> float:
    """Pull of a brighter firefly at distance ``r``.

    ``gaussian``: betamin + (beta0 - betamin) * exp(-gamma r^2)
    ``inverse``:  betamin + (beta0 - betamin) / (1 + gamma r^2)
    """
    if r < 0:
        raise ValueError(f"distance must be >= 0, got {r}")
    r2 = r * r
    if kernel == "gaussian":
        return betamin + (beta0 - betamin) * math.exp(-gamma * r2)
    if kernel == "inverse":
        return betamin + (beta0 - betamin) / (1.0 + gamma * r2)
    raise ValueError(f"unknown attractiveness kernel {kernel!r}")


def first_argmin(scores) -> int:
    # np.argmin returns the first occurrence, which is the tie-break rule
    return int(np.argmin(scores))
