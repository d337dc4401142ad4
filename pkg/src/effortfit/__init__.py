"""Fit COCOMO-family software effort models with Firefly, GA and PSO."""

from effortfit._backend import NATIVE_AVAILABLE, backend_name, set_backend, use_backend
from effortfit.dataset import (
    Dataset,
    DatasetError,
    ProjectRecord,
    SplitDataset,
    load_csv,
    nasa_dataset,
    split_fixed,
    write_csv,
)
from effortfit.metrics import MetricsReport, evaluate
from effortfit.models import ModelSpec, TrainingMAE, default_search_space, predict, predict_all
from effortfit.optimizers import (
    FireflyConfig,
    GaConfig,
    PsoConfig,
    SearchSpace,
    optimize_firefly,
    optimize_ga,
    optimize_pso,
)

__version__ = "0.1.0"
