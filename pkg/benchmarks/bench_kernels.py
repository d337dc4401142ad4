"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--population 40] [--iters 20] [--repeat 3]

Both backends are run on the same seeded problems and must return identical
traces; the script reports wall time per backend and the speed-up.
"""

import argparse
import time

import numpy as np

from effortfit import NATIVE_AVAILABLE, use_backend
from effortfit.dataset import nasa_dataset, split_fixed
from effortfit.models import ModelSpec, TrainingMAE, default_search_space
from effortfit.optimizers import FireflyConfig, GaConfig, PsoConfig, optimize


def best_time(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--population", type=int, default=40)
    parser.add_argument("--iters", type=int, default=20)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not NATIVE_AVAILABLE:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    train = split_fixed(nasa_dataset(), 13).train
    rng = np.random.default_rng(0)
    print(f"{'case':<28}{'python s':>10}{'native s':>10}{'speed-up':>10}  identical")
    for spec in ModelSpec:
        obj = TrainingMAE(spec, train)
        space = default_search_space(spec)
        positions = space.uniform(rng, 2000)
        cases = [(f"{spec.value} batch x2000", lambda: obj.batch(positions))]
        for cfg in (FireflyConfig(iterations=args.iters, population=args.population),
                    GaConfig(iterations=args.iters, population=args.population),
                    PsoConfig(iterations=args.iters, population=args.population)):
            cases.append((f"{spec.value} {cfg.name}", lambda cfg=cfg: optimize(obj, space, cfg, seed=1)))
        for label, fn in cases:
            with use_backend("python"):
                tp, rp = best_time(fn, args.repeat)
            with use_backend("native"):
                tn, rn = best_time(fn, args.repeat)
            if isinstance(rp, np.ndarray):
                same = np.array_equal(rp, rn)
            else:
                same = np.array_equal(rp.trace, rn.trace) and np.array_equal(rp.best_position, rn.best_position)
            print(f"{label:<28}{tp:>10.4f}{tn:>10.4f}{tp / tn:>9.1f}x  {same}")


if __name__ == "__main__":
    main()
