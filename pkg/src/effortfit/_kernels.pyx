# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. Must stay operation-for-operation identical to _purepy.py."""

import numpy as np
cimport numpy as cnp
from libc.math cimport exp, fabs, isfinite, INFINITY

cnp.import_array()

cdef enum:
    BASIC = 0
    MODEL_I = 1
    MODEL_II = 2
    SPHERE = 3


cdef double _eval(int code, double[::1] x, double[::1] log_kloc,
                  double[::1] me, double[::1] effort) noexcept nogil:
    cdef Py_ssize_t k, m
    cdef double total = 0.0, pred, a, b
    if code == SPHERE:
        for k in range(x.shape[0]):
            total += x[k] * x[k]
    else:
        a = x[0]
        b = x[1]
        m = log_kloc.shape[0]
        for k in range(m):
            pred = a * exp(b * log_kloc[k])
            if code >= MODEL_I:
                pred = pred + x[2] * me[k]
            if code == MODEL_II:
                pred = pred + x[3]
            total += fabs(effort[k] - pred)
        total = total / m
    if not isfinite(total):
        return INFINITY
    return total


def native_eval(int code, x, log_kloc, me, effort):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    return _eval(code, xv, np.ascontiguousarray(log_kloc, dtype=np.float64),
                 np.ascontiguousarray(me, dtype=np.float64),
                 np.ascontiguousarray(effort, dtype=np.float64))


def evaluate_batch(native, positions):
    cdef int code = native[0]
    cdef double[::1] lk = np.ascontiguousarray(native[1], dtype=np.float64)
    cdef double[::1] me = np.ascontiguousarray(native[2], dtype=np.float64)
    cdef double[::1] eff = np.ascontiguousarray(native[3], dtype=np.float64)
    cdef double[:, ::1] P = np.ascontiguousarray(positions, dtype=np.float64)
    cdef Py_ssize_t i, n = P.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _eval(code, P[i], lk, me, eff)
    return out


cdef double _call(object func, double[::1] x):
    try:
        v = float(func(np.array(x, dtype=np.float64)))
    except (OverflowError, FloatingPointError, ZeroDivisionError):
        return INFINITY
    if not isfinite(v):
        return INFINITY
    return v


def firefly_sweep(double[:, ::1] pop, double[::1] scores, double[:, :, ::1] noise,
                  double[::1] lower, double[::1] upper, double alpha, double beta0,
                  double betamin, double gamma, bint inverse, bint full_scan,
                  native, func):
    cdef Py_ssize_t n = pop.shape[0], d = pop.shape[1]
    cdef Py_ssize_t i, j, k, jmax
    cdef double r2, diff, beta, v
    cdef bint moved
    cdef bint use_native = native is not None
    cdef int code = 0
    cdef double[::1] lk, me, eff
    cdef long evals = 0
    scale_arr = np.empty(d, dtype=np.float64)
    cdef double[::1] scale = scale_arr
    for k in range(d):
        scale[k] = upper[k] - lower[k]
    if use_native:
        code = native[0]
        lk = np.ascontiguousarray(native[1], dtype=np.float64)
        me = np.ascontiguousarray(native[2], dtype=np.float64)
        eff = np.ascontiguousarray(native[3], dtype=np.float64)

    for i in range(n):
        moved = False
        jmax = n if full_scan else i
        for j in range(jmax):
            if not scores[j] < scores[i]:
                continue
            r2 = 0.0
            for k in range(d):
                diff = pop[i, k] - pop[j, k]
                r2 += diff * diff
            if inverse:
                beta = betamin + (beta0 - betamin) / (1.0 + gamma * r2)
            else:
                beta = betamin + (beta0 - betamin) * exp(-gamma * r2)
            for k in range(d):
                v = pop[i, k] + beta * (pop[j, k] - pop[i, k]) + alpha * (noise[i, j, k] - 0.5) * scale[k]
                if v < lower[k]:
                    v = lower[k]
                elif v > upper[k]:
                    v = upper[k]
                pop[i, k] = v
            if use_native:
                scores[i] = _eval(code, pop[i], lk, me, eff)
            else:
                scores[i] = _call(func, pop[i])
            evals += 1
            moved = True
        if not moved and alpha > 0.0:
            for k in range(d):
                v = pop[i, k] + alpha * (noise[i, i, k] - 0.5) * scale[k]
                if v < lower[k]:
                    v = lower[k]
                elif v > upper[k]:
                    v = upper[k]
                pop[i, k] = v
            if use_native:
                scores[i] = _eval(code, pop[i], lk, me, eff)
            else:
                scores[i] = _call(func, pop[i])
            evals += 1
    return evals
