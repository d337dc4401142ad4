"""Serialise experiment reports: JSON document, trace CSV and text tables."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import fields

from effortfit.harness import OPTIMIZER_ORDER, Comparison, ExperimentConfig, ExperimentReport
from effortfit.metrics import METRIC_NAMES, MetricsReport
from effortfit.models import ModelSpec

FORMAT = "effortfit-report/1"

OPTIMIZER_LABELS = {"firefly": "Firefly", "ga": "GA", "pso": "PSO"}
METRIC_LABELS = {"vaf": "VAF", "mse": "MSE", "mae": "MAE", "mmre": "MMRE", "rmse": "RMSE", "r2": "R^2"}


def _metrics(m: MetricsReport) -> dict:
    return {name: float(getattr(m, name)) for name in METRIC_NAMES}


def _optimizer(cfg) -> dict:
    out = {"name": cfg.name}
    for f in fields(cfg):
        out[f.name] = getattr(cfg, f.name)
    return out


def config_dict(cfg: ExperimentConfig, include_model=True) -> dict:
    space = cfg.search_space
    out = {}
    if include_model:
        out["model"] = cfg.model.value
        out["optimizer"] = _optimizer(cfg.optimizer)
        out["space"] = {"names": list(space.names or ()), "lower": list(space.lower),
                        "upper": list(space.upper)}
    out.update({
        "runs": cfg.runs,
        "master_seed": cfg.master_seed,
        "dataset": cfg.split.train.name.removesuffix("-train"),
        "train_ids": cfg.split.train.ids,
        "test_ids": cfg.split.test.ids,
    })
    return out


def report_dict(rep: ExperimentReport) -> dict:
    names = rep.config.model.coefficient_names
    best = rep.best_run
    return {
        "config": config_dict(rep.config),
        "mean_train": _metrics(rep.mean_train),
        "mean_test": _metrics(rep.mean_test),
        "best_run": {
            "index": best.index,
            "parameters": dict(zip(names, best.parameters)),
            "train": _metrics(best.train),
            "test": _metrics(best.test),
        },
        "runs": [
            {
                "index": r.index,
                "seed": r.seed,
                "parameters": dict(zip(names, r.parameters)),
                "best_score": float(r.best_score),
                "evaluations": r.evaluations,
                "train": _metrics(r.train),
                "test": _metrics(r.test),
            }
            for r in rep.runs
        ],
        "mean_trace": [float(v) for v in rep.mean_trace],
    }


def fit_document(rep: ExperimentReport) -> dict:
    return {"format": FORMAT, "kind": "fit", **report_dict(rep)}


def compare_document(base: ExperimentConfig, comp: Comparison) -> dict:
    cells = []
    for (model, name), rep in comp.reports.items():
        cells.append({"model": model.value, "optimizer": name, **report_dict(rep)})
    errors = [{"model": m.value, "optimizer": o, "error": msg} for (m, o), msg in comp.errors.items()]
    return {
        "format": FORMAT,
        "kind": "compare",
        "config": {**config_dict(base, include_model=False),
                   "iterations": base.optimizer.iterations,
                   "population": base.optimizer.population},
        "cells": cells,
        "errors": errors,
    }


def dumps(doc: dict) -> str:
    # json writes floats with repr(), so parsing back gives identical values
    return json.dumps(doc, indent=2, allow_nan=True) + "\n"


def trace_csv(columns: dict) -> str:
    """CSV with an ``iteration`` column (1-based) followed by ``columns``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["iteration", *columns])
    length = max((len(v) for v in columns.values()), default=0)
    for t in range(length):
        writer.writerow([t + 1, *(repr(float(v[t])) if t < len(v) else "" for v in columns.values())])
    return buf.getvalue()


def fmt(name: str, value: float) -> str:
    text = f"{value:.2f}"
    return text + "%" if name == "vaf" else text


def _render(title, rows):
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = [title, ""]
    for r in rows:
        lines.append("  ".join(cell.rjust(w) if i else cell.ljust(w)
                               for i, (cell, w) in enumerate(zip(r, widths))).rstrip())
    return "\n".join(lines) + "\n"


def fit_table(rep: ExperimentReport) -> str:
    cfg = rep.config
    title = (f"{cfg.model.label}, {OPTIMIZER_LABELS[cfg.optimizer.name]} "
             f"(mean of {cfg.runs} run{'s' if cfg.runs != 1 else ''})")
    header = ["", "Training", "Testing"]
    rows = [[METRIC_LABELS[m], fmt(m, getattr(rep.mean_train, m)), fmt(m, getattr(rep.mean_test, m))]
            for m in METRIC_NAMES]
    return _render(title, [header] + rows)


def model_table(model: ModelSpec, comp: Comparison, runs: int) -> str:
    """One model's metrics: Training then Testing, one column per optimizer."""
    names = [n for n in OPTIMIZER_ORDER if (model, n) in comp.reports]
    title = f"{model.label} (mean of {runs} run{'s' if runs != 1 else ''})"
    groups = ["", *(["Training"] + [""] * (len(names) - 1)), *(["Testing"] + [""] * (len(names) - 1))]
    header = ["", *(OPTIMIZER_LABELS[n] for n in names), *(OPTIMIZER_LABELS[n] for n in names)]
    rows = []
    for m in METRIC_NAMES:
        row = [METRIC_LABELS[m]]
        row += [fmt(m, getattr(comp.reports[(model, n)].mean_train, m)) for n in names]
        row += [fmt(m, getattr(comp.reports[(model, n)].mean_test, m)) for n in names]
        rows.append(row)
    missing = [n for n in OPTIMIZER_ORDER if (model, n) in comp.errors]
    text = _render(title, [groups, header] + rows) if names else title + "\n"
    for n in missing:
        text += f"{OPTIMIZER_LABELS[n]}: failed: {comp.errors[(model, n)]}\n"
    return text
