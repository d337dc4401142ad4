"""Global-best particle swarm with linearly decreasing inertia."""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from effortfit.optimizers._common import (
    OptimizationResult,
    SearchSpace,
    as_objective,
    first_argmin,
)


@dataclass(frozen=True)
class PsoConfig:
    name: ClassVar[str] = "pso"

    iterations: int = 500
    population: int = 100
    c1: float = 2.1
    c2: float = 2.1
    inertia_start: float = 0.9
    inertia_end: float = 0.6
    max_velocity: float = 100.0

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        if self.population < 1:
            raise ValueError(f"population must be >= 1, got {self.population}")
        if self.c1 <= 0 or self.c2 <= 0:
            raise ValueError(f"c1 and c2 must be > 0, got {self.c1}, {self.c2}")
        if self.inertia_start < self.inertia_end:
            raise ValueError("inertia_start must be >= inertia_end")
        if self.max_velocity <= 0:
            raise ValueError(f"max_velocity must be > 0, got {self.max_velocity}")

    def inertia(self, t: int) -> float:
        if self.iterations == 1:
            return self.inertia_start
        frac = t / (self.iterations - 1)
        return self.inertia_start + (self.inertia_end - self.inertia_start) * frac


def optimize_pso(obj, space: SearchSpace, cfg: PsoConfig | None = None, seed: int = 0,
                 initial_positions=None, initial_velocities=None) -> OptimizationResult:
    """Minimise ``obj`` with a global-best swarm.

    Velocities start at zero unless given, are clamped per dimension to
    ``min(max_velocity, width)`` and positions are clipped to the box.
    """
    cfg = cfg or PsoConfig()
    obj = as_objective(obj, space)
    rng = np.random.default_rng(seed)
    n, d = cfg.population, space.dimension
    vmax = np.minimum(cfg.max_velocity, space.width)

    if initial_positions is None:
        x = space.uniform(rng, n)
    else:
        x = space.clip(np.array(initial_positions, dtype=float).reshape(n, d))
    v = np.zeros((n, d)) if initial_velocities is None else \
        np.clip(np.array(initial_velocities, dtype=float).reshape(n, d), -vmax, vmax)

    scores = obj.batch(x)
    evaluations = n
    pbest, pbest_scores = x.copy(), scores.copy()
    g = first_argmin(pbest_scores)
    gbest, gbest_score = pbest[g].copy(), float(pbest_scores[g])
    trace = np.empty(cfg.iterations)

    for t in range(cfg.iterations):
        w = cfg.inertia(t)
        r1 = rng.random((n, d))
        r2 = rng.random((n, d))
        v = w * v + cfg.c1 * r1 * (pbest - x) + cfg.c2 * r2 * (gbest - x)
        v = np.clip(v, -vmax, vmax)
        x = space.clip(x + v)
        scores = obj.batch(x)
        evaluations += n

        improved = scores < pbest_scores
        pbest[improved] = x[improved]
        pbest_scores[improved] = scores[improved]
        g = first_argmin(pbest_scores)
        if pbest_scores[g] < gbest_score:
            gbest, gbest_score = pbest[g].copy(), float(pbest_scores[g])
        trace[t] = gbest_score

    return OptimizationResult(gbest, gbest_score, trace, int(evaluations), "pso", seed)
