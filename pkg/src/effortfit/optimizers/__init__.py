"""Population-based minimisers over a bounded box."""

from effortfit.optimizers._common import (
    Objective,
    OptimizationResult,
    SearchSpace,
    Sphere,
    as_objective,
    attractiveness,
    distance,
)
from effortfit.optimizers.firefly import FireflyConfig, optimize_firefly
from effortfit.optimizers.ga import GaConfig, optimize_ga
from effortfit.optimizers.pso import PsoConfig, optimize_pso

OPTIMIZERS = {
    "firefly": (FireflyConfig, optimize_firefly),
    "ga": (GaConfig, optimize_ga),
    "pso": (PsoConfig, optimize_pso),
}


def optimize(obj, space, cfg, seed=0):
    """Dispatch on the config type."""
    _, fn = OPTIMIZERS[cfg.name]
    return fn(obj, space, cfg, seed)


__all__ = [
    "Objective",
    "OptimizationResult",
    "SearchSpace",
    "Sphere",
    "as_objective",
    "attractiveness",
    "distance",
    "FireflyConfig",
    "GaConfig",
    "PsoConfig",
    "optimize_firefly",
    "optimize_ga",
    "optimize_pso",
    "optimize",
    "OPTIMIZERS",
]
