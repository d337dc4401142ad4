"""Firefly algorithm for box-bounded minimisation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from effortfit import _backend
from effortfit.optimizers._common import (
    OptimizationResult,
    SearchSpace,
    as_objective,
    first_argmin,
)


@dataclass(frozen=True)
class FireflyConfig:
    """Firefly settings. Defaults: 100 fireflies, 500 iterations, alpha 0.4,
    betamin 1, gamma 0.4.

    ``alpha_decay`` multiplies alpha once per iteration; left as ``None`` it is
    chosen so alpha shrinks by a factor ``1e-4 / 0.9`` over the whole run.
    ``kernel`` picks the attractiveness law (``gaussian`` or ``inverse``) and
    ``scan`` whether firefly ``i`` looks at all others (``full``) or only
    those ranked above it (``lower``).
    """

    name: ClassVar[str] = "firefly"

    iterations: int = 500
    population: int = 100
    alpha: float = 0.4
    betamin: float = 1.0
    beta0: float = 1.0
    gamma: float = 0.4
    alpha_decay: float | None = None
    kernel: str = "gaussian"
    scan: str = "lower"

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        if self.population < 2:
            raise ValueError(f"firefly needs population >= 2, got {self.population}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.betamin < 0:
            raise ValueError(f"betamin must be >= 0, got {self.betamin}")
        if self.beta0 <= 0:
            raise ValueError(f"beta0 must be > 0, got {self.beta0}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if self.alpha_decay is not None and not 0 < self.alpha_decay <= 1:
            raise ValueError(f"alpha_decay must be in (0, 1], got {self.alpha_decay}")
        if self.kernel not in ("gaussian", "inverse"):
            raise ValueError(f"kernel must be 'gaussian' or 'inverse', got {self.kernel!r}")
        if self.scan not in ("lower", "full"):
            raise ValueError(f"scan must be 'lower' or 'full', got {self.scan!r}")

    @property
    def decay(self) -> float:
        if self.alpha_decay is not None:
            return self.alpha_decay
        return (1e-4 / 0.9) ** (1.0 / self.iterations)


def optimize_firefly(obj, space: SearchSpace, cfg: FireflyConfig | None = None,
                     seed: int = 0) -> OptimizationResult:
    """Minimise ``obj`` over ``space``.

    Lower score means brighter. Each iteration the population is ranked
    best-first, every firefly moves toward each brighter one it scans (and is
    re-scored after every move), and fireflies with nobody brighter take a
    random step. Random steps are scaled per dimension by the box width and
    alpha decays geometrically.
    """
    cfg = cfg or FireflyConfig()
    obj = as_objective(obj, space)
    kern = _backend.kernels()
    rng = np.random.default_rng(seed)
    n, d = cfg.population, space.dimension
    lower = np.ascontiguousarray(space.lower_array)
    upper = np.ascontiguousarray(space.upper_array)

    pop = np.ascontiguousarray(space.uniform(rng, n))
    scores = np.ascontiguousarray(obj.batch(pop))
    evaluations = n
    k = first_argmin(scores)
    best_position, best_score = pop[k].copy(), float(scores[k])

    alpha = cfg.alpha
    decay = cfg.decay
    trace = np.empty(cfg.iterations)
    func = None if obj.native is not None else obj

    for t in range(cfg.iterations):
        alpha *= decay
        order = np.argsort(scores, kind="stable")
        pop = np.ascontiguousarray(pop[order])
        scores = np.ascontiguousarray(scores[order])
        noise = rng.random((n, n, d))
        evaluations += kern.firefly_sweep(
            pop, scores, noise, lower, upper, alpha, cfg.beta0, cfg.betamin, cfg.gamma,
            cfg.kernel == "inverse", cfg.scan == "full", obj.native, func)
        k = first_argmin(scores)
        if scores[k] < best_score:
            best_position, best_score = pop[k].copy(), float(scores[k])
        trace[t] = best_score

    return OptimizationResult(best_position, best_score, trace, int(evaluations), "firefly", seed)
