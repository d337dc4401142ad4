"""Pure-Python kernels, used when the compiled ``_kernels`` extension is missing.

Every function here mirrors one in ``_kernels.pyx`` operation for operation,
so both backends produce bit-identical floats.
"""

import math

import numpy as np

BASIC, MODEL_I, MODEL_II, SPHERE = 0, 1, 2, 3

INF = math.inf


def native_eval(code, x, log_kloc, me, effort):
    """Score one position ``x`` with a built-in objective."""
    if code == SPHERE:
        total = 0.0
        for v in x:
            total += v * v
    else:
        a = x[0]
        b = x[1]
        total = 0.0
        m = len(log_kloc)
        for k in range(m):
            pred = a * math.exp(b * log_kloc[k])
            if code >= MODEL_I:
                pred = pred + x[2] * me[k]
            if code == MODEL_II:
                pred = pred + x[3]
            total += abs(effort[k] - pred)
        total = total / m
    if not math.isfinite(total):
        return INF
    return total


def _call(func, x):
    try:
        v = float(func(np.array(x, dtype=float)))
    except (OverflowError, FloatingPointError, ZeroDivisionError):
        return INF
    return v if math.isfinite(v) else INF


def evaluate_batch(native, positions):
    code, log_kloc, me, effort = native
    lk = [float(v) for v in log_kloc]
    mes = [float(v) for v in me]
    eff = [float(v) for v in effort]
    return np.array([native_eval(code, [float(v) for v in row], lk, mes, eff)
                     for row in positions], dtype=float)


def firefly_sweep(pop, scores, noise, lower, upper, alpha, beta0, betamin, gamma,
                  inverse, full_scan, native, func):
    """One firefly generation over a population sorted best-first.

    ``pop`` and ``scores`` are updated in place. Firefly ``i`` moves toward
    every brighter (lower-scoring) ``j``; with ``full_scan`` false only
    ``j < i`` is scanned. A firefly with no brighter neighbour takes a pure
    random step. Returns the number of objective evaluations.
    """
    n, d = pop.shape
    lo = [float(v) for v in lower]
    hi = [float(v) for v in upper]
    scale = [hi[k] - lo[k] for k in range(d)]
    X = [[float(v) for v in row] for row in pop]
    S = [float(v) for v in scores]
    if native is not None:
        code = native[0]
        lk = [float(v) for v in native[1]]
        mes = [float(v) for v in native[2]]
        eff = [float(v) for v in native[3]]
    evals = 0

    for i in range(n):
        xi = X[i]
        moved = False
        jmax = n if full_scan else i
        for j in range(jmax):
            if not S[j] < S[i]:
                continue
            xj = X[j]
            r2 = 0.0
            for k in range(d):
                diff = xi[k] - xj[k]
                r2 += diff * diff
            if inverse:
                beta = betamin + (beta0 - betamin) / (1.0 + gamma * r2)
            else:
                beta = betamin + (beta0 - betamin) * math.exp(-gamma * r2)
            u = noise[i, j]
            for k in range(d):
                v = xi[k] + beta * (xj[k] - xi[k]) + alpha * (float(u[k]) - 0.5) * scale[k]
                if v < lo[k]:
                    v = lo[k]
                elif v > hi[k]:
                    v = hi[k]
                xi[k] = v
            S[i] = native_eval(code, xi, lk, mes, eff) if native is not None else _call(func, xi)
            evals += 1
            moved = True
        if not moved and alpha > 0.0:
            u = noise[i, i]
            for k in range(d):
                v = xi[k] + alpha * (float(u[k]) - 0.5) * scale[k]
                if v < lo[k]:
                    v = lo[k]
                elif v > hi[k]:
                    v = hi[k]
                xi[k] = v
            S[i] = native_eval(code, xi, lk, mes, eff) if native is not None else _call(func, xi)
            evals += 1

    pop[:] = X
    scores[:] = S
    return evals
