import numpy as np
import pytest


class CountingObjective:
    """Wraps an objective to count evaluations, remember the running minimum,
    and optionally assert per-evaluation box containment.

    Deliberately exposes no kernel_id, so every evaluation goes through the
    Python backend and is observable.
    """

    def __init__(self, fn, space=None):
        self.fn = fn
        self.space = space
        self.calls = 0
        self.running_min = float("inf")

    def __call__(self, x):
        if self.space is not None:
            assert self.space.contains(x), f"evaluation outside the box: {x}"
        self.calls += 1
        value = self.fn(x)
        if value < self.running_min:
            self.running_min = value
        return value


@pytest.fixture
def counted():
    return CountingObjective
