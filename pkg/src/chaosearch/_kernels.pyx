# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops for the chaos search.

Covers the 2-D built-in objectives only (dispatched by ``kernel_id``);
everything else goes through chaosearch._pykernels. Arithmetic here mirrors
the pure-Python backend operation for operation so both produce bit-identical
trajectories and objective values.
"""

from libc.math cimport sin, sqrt, pow

cdef double STATE_EPS = 1e-15


cdef inline double _clamp01(double x) nogil:
    if x < STATE_EPS:
        return STATE_EPS
    if x > 1.0 - STATE_EPS:
        return 1.0 - STATE_EPS
    return x


cdef double _feval(int fid, double x1, double x2) nogil:
    cdef double d, r2, s, t, u
    if fid == 1:
        d = x1 * x1 - x2
        return 100.0 * d * d + (1.0 - x1) * (1.0 - x1)
    elif fid == 2:
        return (
            (4.0 - 2.1 * x1 * x1 + x1 * x1 * x1 * x1 / 3.0) * x1 * x1
            + x1 * x2
            + (-4.0 + 4.0 * x2 * x2) * x2 * x2
        )
    elif fid == 3:
        r2 = x1 * x1 + x2 * x2
        s = sin(sqrt(r2))
        t = 1.0 + 0.001 * r2
        return -0.5 + (s * s - 0.5) / (t * t)
    elif fid == 4:
        r2 = x1 * x1 + x2 * x2
        s = sin(50.0 * pow(r2, 0.1))
        return pow(r2, 0.25) * (s * s + 1.0)
    else:
        t = x1 + x2 + 1.0
        u = 2.0 * x1 - 3.0 * x2
        return (
            1.0
            + t * t * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2
                       + 6.0 * x1 * x2 + 3.0 * x2 * x2)
        ) * (
            30.0
            + u * u * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2
                       - 36.0 * x1 * x2 + 27.0 * x2 * x2)
        )


def eval_builtin(int fid, double x1, double x2):
    """Evaluate a built-in objective by kernel id (1..5)."""
    if fid < 1 or fid > 5:
        raise ValueError(f"unknown kernel id {fid}")
    return _feval(fid, x1, x2)


def rough_search(int fid, double coeff_a,
                 double[::1] state, double[::1] lower, double[::1] upper,
                 long n_iters, double[:, ::1] points, double[::1] values):
    """Global sweep: scale each chaos iterate into the box, replace the
    nearest candidate (ties: lowest index) when strictly better.

    Mutates ``state``, ``points`` and ``values`` in place; performs exactly
    ``n_iters`` objective evaluations.
    """
    cdef Py_ssize_t p = points.shape[0]
    cdef double s1 = state[0]
    cdef double s2 = state[1]
    cdef double lo1 = lower[0]
    cdef double lo2 = lower[1]
    cdef double w1 = upper[0] - lower[0]
    cdef double w2 = upper[1] - lower[1]
    cdef double x1, x2, d1, d2, dd, best_dd, fx
    cdef Py_ssize_t k, l, nearest
    if fid < 1 or fid > 5:
        raise ValueError(f"unknown kernel id {fid}")
    with nogil:
        for k in range(n_iters):
            s1 = _clamp01(coeff_a * s1 * (1.0 - s1))
            s2 = _clamp01(coeff_a * s2 * (1.0 - s2))
            x1 = lo1 + w1 * s1
            x2 = lo2 + w2 * s2
            nearest = 0
            d1 = points[0, 0] - x1
            d2 = points[0, 1] - x2
            best_dd = d1 * d1 + d2 * d2
            for l in range(1, p):
                d1 = points[l, 0] - x1
                d2 = points[l, 1] - x2
                dd = d1 * d1 + d2 * d2
                if dd < best_dd:
                    best_dd = dd
                    nearest = l
            fx = _feval(fid, x1, x2)
            if fx < values[nearest]:
                values[nearest] = fx
                points[nearest, 0] = x1
                points[nearest, 1] = x2
    state[0] = s1
    state[1] = s2


def local_search(int fid, double coeff_a,
                 double[::1] state, double[::1] lower, double[::1] upper,
                 long n_iters, double[::1] point, double value):
    """Chaos search over one box tracking a single best point.

    Mutates ``state`` and ``point`` in place and returns the updated value;
    performs exactly ``n_iters`` objective evaluations.
    """
    cdef double s1 = state[0]
    cdef double s2 = state[1]
    cdef double lo1 = lower[0]
    cdef double lo2 = lower[1]
    cdef double w1 = upper[0] - lower[0]
    cdef double w2 = upper[1] - lower[1]
    cdef double x1, x2, fx
    cdef Py_ssize_t k
    if fid < 1 or fid > 5:
        raise ValueError(f"unknown kernel id {fid}")
    with nogil:
        for k in range(n_iters):
            s1 = _clamp01(coeff_a * s1 * (1.0 - s1))
            s2 = _clamp01(coeff_a * s2 * (1.0 - s2))
            x1 = lo1 + w1 * s1
            x2 = lo2 + w2 * s2
            fx = _feval(fid, x1, x2)
            if fx < value:
                value = fx
                point[0] = x1
                point[1] = x2
    state[0] = s1
    state[1] = s2
    return value
