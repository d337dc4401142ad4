"""Command-line interface.

    effortfit fit --model basic --optimizer firefly --seed 42
    effortfit compare --runs 25 --iters 500 --out results/
    effortfit predict --model basic --coef 1 1
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import fields
from pathlib import Path

from effortfit.dataset import DatasetError, load_csv, nasa_dataset, split_fixed
from effortfit.harness import (
    DEFAULT_CONFIGS,
    ExperimentConfig,
    ExperimentError,
    compare_all,
    run_experiment,
)
from effortfit.metrics import METRIC_NAMES, MetricError
from effortfit.models import ModelSpec, default_search_space, predict_all
from effortfit import metrics as _metrics
from effortfit import reporting

PROG = "effortfit"


class UsageError(Exception):
    pass


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _bound(text):
    try:
        name, rng = text.split("=", 1)
        lo, hi = rng.split(":", 1)
        return name.strip().lower(), (float(lo), float(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected NAME=LO:HI, got {text!r}") from None


def _setting(text):
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {text!r}")
    key, value = text.split("=", 1)
    return key.strip(), value.strip()


def _load_data(args):
    return load_csv(args.data) if args.data else nasa_dataset()


def _space(model, bounds):
    space = default_search_space(model)
    if not bounds:
        return None
    overrides = {}
    for name, (lo, hi) in bounds:
        if name not in model.coefficient_names:
            raise UsageError(f"{model.value} has no coefficient {name!r}")
        overrides[name] = (lo, hi)
    try:
        return space.with_bounds(overrides)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _optimizer_config(name, iters, population, settings):
    cls = DEFAULT_CONFIGS[name]
    types = {f.name: f.type for f in fields(cls)}
    kwargs = {"iterations": iters, "population": population}
    for key, raw in settings or ():
        if key not in types:
            raise UsageError(f"{name} has no setting {key!r}; known: {', '.join(types)}")
        if "int" in str(types[key]):
            kwargs[key] = int(raw)
        elif "float" in str(types[key]):
            kwargs[key] = None if raw.lower() == "none" else float(raw)
        else:
            kwargs[key] = raw
    try:
        return cls(**kwargs)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _write(out: Path, name: str, text: str):
    out.mkdir(parents=True, exist_ok=True)
    (out / name).write_text(text, encoding="utf-8")


def cmd_fit(args) -> int:
    model = ModelSpec.parse(args.model)
    data = _load_data(args)
    split = split_fixed(data, args.train_count)
    cfg = ExperimentConfig(
        model=model,
        optimizer=_optimizer_config(args.optimizer, args.iters, args.population, args.set),
        split=split,
        runs=args.runs,
        master_seed=args.seed,
        space=_space(model, args.bound),
    )
    rep = run_experiment(cfg, jobs=args.jobs)
    table = reporting.fit_table(rep)
    out = Path(args.out)
    _write(out, "report.json", reporting.dumps(reporting.fit_document(rep)))
    _write(out, "trace.csv", reporting.trace_csv({"best": rep.mean_trace}))
    _write(out, "table.txt", table)
    if not args.quiet:
        print(table, end="")
        print(f"\nwrote {out / 'report.json'}, {out / 'trace.csv'}, {out / 'table.txt'}")
    return 0


def cmd_compare(args) -> int:
    data = _load_data(args)
    split = split_fixed(data, args.train_count)
    spaces = {m: _space(m, [b for b in args.bound or () if b[0] in m.coefficient_names])
              for m in ModelSpec}
    base = ExperimentConfig(
        model=ModelSpec.BASIC,
        optimizer=DEFAULT_CONFIGS["firefly"](iterations=args.iters, population=args.population),
        split=split,
        runs=args.runs,
        master_seed=args.seed,
    )
    comp = compare_all(base, spaces={m: s for m, s in spaces.items() if s is not None}, jobs=args.jobs)
    out = Path(args.out)
    _write(out, "report.json", reporting.dumps(reporting.compare_document(base, comp)))
    for model in ModelSpec:
        table = reporting.model_table(model, comp, args.runs)
        _write(out, f"table_{model.value}.txt", table)
        columns = {name: comp.reports[(model, name)].mean_trace
                   for name in reporting.OPTIMIZER_ORDER if (model, name) in comp.reports}
        _write(out, f"trace_{model.value}.csv", reporting.trace_csv(columns))
        if not args.quiet:
            print(table)
    if not args.quiet:
        print(f"wrote report, tables and traces to {out}/")
    if comp.errors:
        for (m, o), msg in comp.errors.items():
            print(f"{PROG}: {m.value}/{o} failed: {msg}", file=sys.stderr)
        return 1
    return 0


def cmd_predict(args) -> int:
    model = ModelSpec.parse(args.model)
    if len(args.coef) != model.dimension:
        raise UsageError(
            f"{model.value} takes {model.dimension} coefficients "
            f"({' '.join(model.coefficient_names)}), got {len(args.coef)}")
    data = _load_data(args)
    if args.subset != "all":
        data = getattr(split_fixed(data, args.train_count), args.subset)
    predicted = predict_all(model, args.coef, data)
    print(f"{'id':>4}  {'kloc':>8}  {'me':>6}  {'actual':>10}  {'predicted':>10}")
    for r, p in zip(data.records, predicted):
        print(f"{r.id:>4}  {r.kloc:>8g}  {r.me:>6g}  {r.effort:>10.4f}  {p:>10.4f}")
    print()
    funcs = {"vaf": _metrics.vaf, "mse": _metrics.mse, "mae": _metrics.mae,
             "mmre": _metrics.mmre, "rmse": _metrics.rmse, "r2": _metrics.r_squared}
    for name in METRIC_NAMES:
        try:
            value = reporting.fmt(name, funcs[name](data.effort, predicted))
        except MetricError as exc:
            value = f"n/a ({exc})"
        print(f"{reporting.METRIC_LABELS[name]:<5} {value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def data_args(p):
        p.add_argument("--data", help="CSV with columns id,kloc,me,effort (default: built-in NASA 18)")
        p.add_argument("--train-count", type=_positive_int, default=13,
                       help="leading records used for training (default 13)")

    def run_args(p):
        data_args(p)
        p.add_argument("--runs", type=_positive_int, default=25)
        p.add_argument("--iters", type=_positive_int, default=500)
        p.add_argument("--population", type=_positive_int, default=100)
        p.add_argument("--seed", type=int, default=0, help="master seed")
        p.add_argument("--bound", type=_bound, action="append", metavar="NAME=LO:HI",
                       help="override a coefficient's search bounds, e.g. a=0:5")
        p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
        p.add_argument("--out", default="results", help="output directory")
        p.add_argument("--quiet", action="store_true")

    fit = sub.add_parser("fit", help="repeated fits of one model with one optimizer")
    fit.add_argument("--model", required=True, choices=[m.value for m in ModelSpec])
    fit.add_argument("--optimizer", required=True, choices=list(DEFAULT_CONFIGS))
    run_args(fit)
    fit.add_argument("--set", type=_setting, action="append", metavar="KEY=VALUE",
                     help="optimizer setting, e.g. gamma=1.0 or beta0=2")
    fit.set_defaults(func=cmd_fit)

    compare = sub.add_parser("compare", help="all models against all optimizers")
    run_args(compare)
    compare.set_defaults(func=cmd_compare)

    pred = sub.add_parser("predict", help="evaluate explicit coefficients")
    pred.add_argument("--model", required=True, choices=[m.value for m in ModelSpec])
    pred.add_argument("--coef", type=float, nargs="+", required=True, metavar="X",
                      help="coefficients in order a b [c [d]]")
    pred.add_argument("--subset", choices=["all", "train", "test"], default="all")
    data_args(pred)
    pred.set_defaults(func=cmd_predict)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{PROG}: error: {exc}\n")
    except (DatasetError, ExperimentError, MetricError, ArithmeticError, ValueError, OSError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
