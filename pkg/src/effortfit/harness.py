"""Repeated seeded fitting runs and their aggregation."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from effortfit.dataset import SplitDataset
from effortfit.metrics import MetricsReport, evaluate
from effortfit.models import ModelSpec, TrainingMAE, default_search_space
from effortfit.optimizers import FireflyConfig, GaConfig, PsoConfig, SearchSpace, optimize

__all__ = [
    "ExperimentError",
    "ExperimentConfig",
    "RunResult",
    "ExperimentReport",
    "Comparison",
    "derive_seed",
    "run_experiment",
    "compare_all",
]

OPTIMIZER_ORDER = ("firefly", "ga", "pso")
DEFAULT_CONFIGS = {"firefly": FireflyConfig, "ga": GaConfig, "pso": PsoConfig}


class ExperimentError(RuntimeError):
    pass


def derive_seed(master_seed: int, run_index: int) -> int:
    """Seed for run ``run_index``.

    Hashes the pair ``(master_seed, run_index)`` through numpy's
    ``SeedSequence`` and takes the first 64-bit word of its state. Each run's
    seed depends on its own index only, so adding runs never changes earlier ones.
    """
    state = np.random.SeedSequence([int(master_seed), int(run_index)]).generate_state(1, np.uint64)
    return int(state[0])


@dataclass(frozen=True)
class ExperimentConfig:
    model: ModelSpec
    optimizer: FireflyConfig | GaConfig | PsoConfig
    split: SplitDataset
    runs: int = 25
    master_seed: int = 0
    space: SearchSpace | None = None

    def __post_init__(self):
        object.__setattr__(self, "model", ModelSpec.parse(self.model))
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.space is not None and self.space.dimension != self.model.dimension:
            raise ValueError(
                f"search space has {self.space.dimension} dimensions, "
                f"{self.model.value} needs {self.model.dimension}")

    @property
    def search_space(self) -> SearchSpace:
        return self.space if self.space is not None else default_search_space(self.model)


@dataclass
class RunResult:
    index: int
    seed: int
    parameters: tuple[float, ...]
    best_score: float
    train: MetricsReport
    test: MetricsReport
    trace: np.ndarray
    evaluations: int


@dataclass
class ExperimentReport:
    config: ExperimentConfig
    runs: list[RunResult]
    mean_train: MetricsReport
    mean_test: MetricsReport
    mean_trace: np.ndarray

    @property
    def best_run(self) -> RunResult:
        """Run with the lowest training objective; ties go to the earliest."""
        return min(self.runs, key=lambda r: (r.best_score, r.index))


def _single_run(cfg: ExperimentConfig, index: int) -> RunResult:
    seed = derive_seed(cfg.master_seed, index)
    # the objective only ever sees the training side
    objective = TrainingMAE(cfg.model, cfg.split.train)
    try:
        res = optimize(objective, cfg.search_space, cfg.optimizer, seed)
        params = tuple(float(v) for v in res.best_position)
        train = evaluate(cfg.model, params, cfg.split.train)
        test = evaluate(cfg.model, params, cfg.split.test)
    except Exception as exc:
        raise ExperimentError(f"run {index}: {exc}") from exc
    return RunResult(index, seed, params, res.best_score, train, test, res.trace, res.evaluations)


def _aggregate(cfg, runs):
    return ExperimentReport(
        config=cfg,
        runs=runs,
        mean_train=MetricsReport.mean(r.train for r in runs),
        mean_test=MetricsReport.mean(r.test for r in runs),
        mean_trace=np.mean([r.trace for r in runs], axis=0),
    )


def run_experiment(cfg: ExperimentConfig, jobs: int = 1) -> ExperimentReport:
    """Fit ``cfg.runs`` times on the training split and average the metrics.

    ``jobs > 1`` spreads runs over worker processes; the report is the same
    either way.
    """
    indices = range(cfg.runs)
    if jobs > 1 and cfg.runs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            runs = list(pool.map(_single_run, [cfg] * cfg.runs, indices))
    else:
        runs = [_single_run(cfg, k) for k in indices]
    return _aggregate(cfg, runs)


@dataclass
class Comparison:
    reports: dict = field(default_factory=dict)   # (ModelSpec, optimizer name) -> ExperimentReport
    errors: dict = field(default_factory=dict)    # same keys -> error message

    def get(self, model, optimizer):
        return self.reports.get((ModelSpec.parse(model), optimizer))


def compare_all(base: ExperimentConfig, spaces=None, jobs: int = 1) -> Comparison:
    """Every model against every optimizer.

    Split, runs and master seed come from ``base``. Each optimizer uses its
    default settings with ``base.optimizer``'s iteration and population
    budget. ``spaces`` may map a model to a custom search space. A failing
    cell is recorded in ``errors`` and the others still run.
    """
    spaces = spaces or {}
    out = Comparison()
    for model in ModelSpec:
        for name in OPTIMIZER_ORDER:
            opt_cfg = DEFAULT_CONFIGS[name](iterations=base.optimizer.iterations,
                                            population=base.optimizer.population)
            cfg = replace(base, model=model, optimizer=opt_cfg, space=spaces.get(model))
            try:
                out.reports[(model, name)] = run_experiment(cfg, jobs=jobs)
            except ExperimentError as exc:
                out.errors[(model, name)] = str(exc)
    return out
