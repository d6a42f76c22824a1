"""Logistic-map chaos streams and box search spaces.

The logistic recurrence X <- A*X*(1-X) is ergodic on [0, 1] for A = 4, so a
single trajectory eventually covers the unit box; scaling its iterates into an
arbitrary box turns it into a derivative-free global sampler.
"""

from dataclasses import dataclass

import numpy as np

DEFAULT_COEFFICIENT = 4.0

# Values whose orbit under A=4 collapses onto a fixed point or a short cycle:
# 0 and 1 map to 0; 0.5 maps to 1; 0.25 and 0.75 sit on the period-1 orbit 0.75.
DEGENERATE_VALUES = (0.0, 0.25, 0.5, 0.75, 1.0)
DEGENERATE_TOL = 1e-12

# Clamp after every step: in exact arithmetic the orbit stays in (0, 1), but
# rounding can land exactly on the absorbing fixed point 0.
STATE_EPS = 1e-15


class DegenerateSeed(ValueError):
    """Seed component too close to a fixed point or short periodic orbit."""


class DimensionMismatch(ValueError):
    """Vector dimension does not match the search space."""


@dataclass(frozen=True)
class SearchSpace:
    """Box constraints: lower[i] <= x[i] <= upper[i] per dimension."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise DimensionMismatch(
                f"bound shapes differ: {lower.shape} vs {upper.shape}"
            )
        if not np.all(lower < upper):
            raise ValueError("each lower bound must be strictly below its upper bound")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dimension(self):
        return self.lower.shape[0]

    @property
    def widths(self):
        return self.upper - self.lower

    def contains(self, x):
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))


@dataclass
class ChaosStream:
    """State of one logistic-map trajectory in (0, 1)^n.

    A value type: copy it to branch a trajectory, never share one stream
    between threads.
    """

    state: np.ndarray
    coefficient_a: float = DEFAULT_COEFFICIENT

    def __post_init__(self):
        # Fresh seeds should additionally pass validate_seed; evolved states
        # only need to stay inside the open unit interval (the step clamp
        # guarantees it), and may pass arbitrarily close to periodic points.
        self.state = np.asarray(self.state, dtype=float).copy()
        if self.state.ndim != 1:
            raise DimensionMismatch("stream state must be a 1-D vector")
        if np.any(self.state <= 0.0) or np.any(self.state >= 1.0):
            raise ValueError("stream state must lie strictly inside (0, 1)")

    @property
    def dimension(self):
        return self.state.shape[0]


def validate_seed(state):
    """Check a candidate seed vector and return it as a float array.

    Rejects components outside [0, 1] and components within ``DEGENERATE_TOL``
    of {0, 0.25, 0.5, 0.75, 1}; those orbits are fixed points or short cycles
    under A = 4 and never cover the box. Callers should redraw on rejection.
    """
    state = np.asarray(state, dtype=float).copy()
    if state.ndim != 1:
        raise DimensionMismatch("seed state must be a 1-D vector")
    if np.any(state < 0.0) or np.any(state > 1.0):
        raise ValueError("seed components must lie in [0, 1]")
    for bad in DEGENERATE_VALUES:
        if np.any(np.abs(state - bad) <= DEGENERATE_TOL):
            raise DegenerateSeed(f"seed component within {DEGENERATE_TOL} of {bad}")
    return state


def draw_seed(rng, dimension):
    """Draw a validated seed vector, redrawing past degenerate components."""
    while True:
        try:
            return validate_seed(rng.random(dimension))
        except DegenerateSeed:
            continue


def logistic_step(stream):
    """Advance one step: each component becomes A*X*(1-X), independently."""
    a = stream.coefficient_a
    x = stream.state
    new = a * x * (1.0 - x)
    np.clip(new, STATE_EPS, 1.0 - STATE_EPS, out=new)
    return ChaosStream(state=new, coefficient_a=a)


def chaos_sequence(stream, count):
    """Return the next ``count`` states as a (count, n) array.

    The input stream is not modified.
    """
    out = np.empty((count, stream.dimension))
    a = stream.coefficient_a
    state = [float(v) for v in stream.state]
    n = len(state)
    lo, hi = STATE_EPS, 1.0 - STATE_EPS
    for k in range(count):
        for i in range(n):
            x = a * state[i] * (1.0 - state[i])
            if x < lo:
                x = lo
            elif x > hi:
                x = hi
            state[i] = x
            out[k, i] = x
    return out


def scale_to_bounds(unit_point, space):
    """Map a point of [0, 1]^n affinely onto the box: a + (b - a) * X."""
    unit_point = np.asarray(unit_point, dtype=float)
    if unit_point.shape != (space.dimension,):
        raise DimensionMismatch(
            f"point has shape {unit_point.shape}, space dimension is {space.dimension}"
        )
    return space.lower + (space.upper - space.lower) * unit_point
