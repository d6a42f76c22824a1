"""Pure-Python fallback for the search hot loops.

Used when the compiled extension is unavailable, when the objective is an
arbitrary Python callable (no ``kernel_id``), and for cross-checking the
compiled backend. The arithmetic mirrors ``_kernels.pyx`` operation for
operation so both backends yield bit-identical results.
"""

import numpy as np

STATE_EPS = 1e-15


def _clamp01(x):
    if x < STATE_EPS:
        return STATE_EPS
    if x > 1.0 - STATE_EPS:
        return 1.0 - STATE_EPS
    return x


def rough_search(f, coeff_a, state, lower, upper, n_iters, points, values):
    """Global sweep updating the nearest candidate on strict improvement.

    Mutates ``state``, ``points`` and ``values`` in place; performs exactly
    ``n_iters`` evaluations of ``f``.
    """
    n = state.shape[0]
    p = points.shape[0]
    s = [float(v) for v in state]
    lo = [float(v) for v in lower]
    w = [float(u) - l for u, l in zip(upper, lo)]
    x = np.empty(n)
    for _ in range(n_iters):
        for i in range(n):
            si = _clamp01(coeff_a * s[i] * (1.0 - s[i]))
            s[i] = si
            x[i] = lo[i] + w[i] * si
        nearest = 0
        best_dd = 0.0
        for i in range(n):
            d = points[0, i] - x[i]
            best_dd += d * d
        for l in range(1, p):
            dd = 0.0
            for i in range(n):
                d = points[l, i] - x[i]
                dd += d * d
            if dd < best_dd:
                best_dd = dd
                nearest = l
        fx = f(x)
        if fx < values[nearest]:
            values[nearest] = fx
            points[nearest] = x
    state[:] = s


def local_search(f, coeff_a, state, lower, upper, n_iters, point, value):
    """Chaos search over one box tracking a single best point.

    Mutates ``state`` and ``point`` in place and returns the updated value;
    performs exactly ``n_iters`` evaluations of ``f``.
    """
    n = state.shape[0]
    s = [float(v) for v in state]
    lo = [float(v) for v in lower]
    w = [float(u) - l for u, l in zip(upper, lo)]
    x = np.empty(n)
    for _ in range(n_iters):
        for i in range(n):
            si = _clamp01(coeff_a * s[i] * (1.0 - s[i]))
            s[i] = si
            x[i] = lo[i] + w[i] * si
        fx = f(x)
        if fx < value:
            value = fx
            point[:] = x
    state[:] = s
    return value
