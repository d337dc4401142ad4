"""Real-valued generational genetic algorithm."""

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
class GaConfig:
    name: ClassVar[str] = "ga"

    iterations: int = 500
    population: int = 100
    tournament_size: int = 2
    crossover_probability: float = 0.80
    mutation_probability: float = 0.05
    mutation_scale: float = 0.10  # Gaussian sigma as a fraction of each dimension's width
    elitism_count: int = 1

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        if self.population < 1:
            raise ValueError(f"population must be >= 1, got {self.population}")
        if self.tournament_size < 1:
            raise ValueError(f"tournament_size must be >= 1, got {self.tournament_size}")
        for name in ("crossover_probability", "mutation_probability"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {p}")
        if self.mutation_scale < 0:
            raise ValueError(f"mutation_scale must be >= 0, got {self.mutation_scale}")
        if not 0 <= self.elitism_count < self.population:
            raise ValueError(
                f"elitism_count must be in [0, population), got {self.elitism_count}")


def _tournament(rng, scores, count, size):
    """Winner indices of ``count`` tournaments drawn with replacement.

    Ties go to the contestant drawn first.
    """
    contestants = rng.integers(0, len(scores), size=(count, size))
    winner = np.argmin(scores[contestants], axis=1)
    return contestants[np.arange(count), winner]


def optimize_ga(obj, space: SearchSpace, cfg: GaConfig | None = None,
                seed: int = 0) -> OptimizationResult:
    """Minimise ``obj`` with tournament selection, arithmetic crossover and
    Gaussian mutation.

    Every generation produces a full population of children (all evaluated).
    The ``elitism_count`` best parents then replace the worst children if
    they beat them, so the best score never gets worse.
    """
    cfg = cfg or GaConfig()
    obj = as_objective(obj, space)
    rng = np.random.default_rng(seed)
    n, d = cfg.population, space.dimension
    sigma = cfg.mutation_scale * space.width

    pop = space.uniform(rng, n)
    scores = obj.batch(pop)
    evaluations = n
    k = first_argmin(scores)
    best_position, best_score = pop[k].copy(), float(scores[k])
    trace = np.empty(cfg.iterations)

    for t in range(cfg.iterations):
        p1 = pop[_tournament(rng, scores, n, cfg.tournament_size)]
        p2 = pop[_tournament(rng, scores, n, cfg.tournament_size)]
        cross = rng.random(n) < cfg.crossover_probability
        lam = rng.random(n)[:, None]
        children = np.where(cross[:, None], lam * p1 + (1.0 - lam) * p2, p1)

        mutate = rng.random((n, d)) < cfg.mutation_probability
        step = rng.normal(0.0, 1.0, (n, d)) * sigma
        children = space.clip(np.where(mutate, children + step, children))
        child_scores = obj.batch(children)
        evaluations += n

        if cfg.elitism_count:
            elite = np.argsort(scores, kind="stable")[:cfg.elitism_count]
            worst = np.argsort(child_scores, kind="stable")[::-1][:cfg.elitism_count]
            for e, w in zip(elite, worst):
                if scores[e] < child_scores[w]:
                    children[w] = pop[e]
                    child_scores[w] = scores[e]

        pop, scores = children, child_scores
        k = first_argmin(scores)
        if scores[k] < best_score:
            best_position, best_score = pop[k].copy(), float(scores[k])
        trace[t] = best_score

    return OptimizationResult(best_position, best_score, trace, int(evaluations), "ga", seed)
