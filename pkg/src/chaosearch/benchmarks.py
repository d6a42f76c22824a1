"""The five 2-D benchmark objectives with domains and reference optima.

All functions are pure and reentrant. The scalar formulas are written with the
same operation order as the compiled kernels so both backends agree bitwise.

Notes on the registry values:

* F3 attains -1 at the origin (the -0.5 offset plus the -0.5/1 fraction);
  some published tables list +1 for this function, which the formula cannot
  produce anywhere in the box.
* F4 is implemented in its classical form r^0.5 * (sin^2(50 r^0.2) + 1),
  whose unique global minimizer is the origin. Moving the "+1" inside the
  sine would create infinitely many global minima.
* The open domains (-100, 100) are handled as closed boxes; every optimum is
  interior, so the distinction never matters.
"""

from dataclasses import dataclass
from math import pow as _pow
from math import sin, sqrt

import numpy as np

from .chaos import SearchSpace


def eval_f1(x1, x2):
    """Rosenbrock valley."""
    d = x1 * x1 - x2
    return 100.0 * d * d + (1.0 - x1) * (1.0 - x1)


def eval_f2(x1, x2):
    """Six-hump camel back."""
    return (
        (4.0 - 2.1 * x1 * x1 + x1 * x1 * x1 * x1 / 3.0) * x1 * x1
        + x1 * x2
        + (-4.0 + 4.0 * x2 * x2) * x2 * x2
    )


def eval_f3(x1, x2):
    """Schaffer-type radial ripple; depends on x1^2 + x2^2 only."""
    r2 = x1 * x1 + x2 * x2
    s = sin(sqrt(r2))
    t = 1.0 + 0.001 * r2
    return -0.5 + (s * s - 0.5) / (t * t)


def eval_f4(x1, x2):
    """Stretched-V radial function; extremely sharp minimum at the origin."""
    r2 = x1 * x1 + x2 * x2
    s = sin(50.0 * _pow(r2, 0.1))
    return _pow(r2, 0.25) * (s * s + 1.0)


def eval_f5(x1, x2):
    """Goldstein-Price."""
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


@dataclass(frozen=True)
class BenchmarkSpec:
    name: str
    objective: object  # callable(x: ndarray of length 2) -> float
    space: SearchSpace
    reference_minimizer: np.ndarray
    reference_value: float


def _objective(scalar_fn, kernel_id):
    def objective(x):
        return scalar_fn(x[0], x[1])

    objective.kernel_id = kernel_id
    objective.dimension = 2
    return objective


def _spec(name, scalar_fn, kernel_id, bound, minimizer, value):
    return BenchmarkSpec(
        name=name,
        objective=_objective(scalar_fn, kernel_id),
        space=SearchSpace(lower=np.array([-bound, -bound]),
                          upper=np.array([bound, bound])),
        reference_minimizer=np.array(minimizer),
        reference_value=value,
    )


_SPECS = (
    _spec("F1", eval_f1, 1, 2.048, (1.0, 1.0), 0.0),
    _spec("F2", eval_f2, 2, 100.0,
          (0.08984201310031806, -0.7126564030207396), -1.0316284534898774),
    _spec("F3", eval_f3, 3, 100.0, (0.0, 0.0), -1.0),
    _spec("F4", eval_f4, 4, 100.0, (0.0, 0.0), 0.0),
    _spec("F5", eval_f5, 5, 2.0, (0.0, -1.0), 3.0),
)


def registry():
    """All five benchmark specs, in order F1..F5."""
    return list(_SPECS)


def get_benchmark(name):
    for spec in _SPECS:
        if spec.name == name:
            return spec
    raise KeyError(f"unknown benchmark {name!r} (expected one of F1..F5)")
