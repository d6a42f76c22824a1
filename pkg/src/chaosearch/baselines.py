"""Reconstructed comparison algorithms at the matched budget M * N.

Both are documented reconstructions from one-line descriptions of earlier
chaos-search variants: a single-trajectory global search with no range
reduction, and a staged search whose box shrinks by a fixed rate and recenters
on the best point after every stage.
"""

from dataclasses import dataclass

import numpy as np

from . import _backend
from .chaos import SearchSpace
from .engine import Candidate, InvalidParams, OptResult, SearchParams, derive_stream

_TAG_COSA = 11
_TAG_VRR = 12


@dataclass
class VrrParams:
    """Staged-shrinkage baseline: box widths scale by gamma after each stage."""

    base: SearchParams
    reduction_rate: float = 0.7

    def __post_init__(self):
        if not 0.0 < self.reduction_rate < 1.0:
            raise InvalidParams("reduction_rate must lie strictly in (0, 1)")


def cosa_optimize(f, space, params):
    """Single-trajectory chaos search over the full box, M * N iterations."""
    total = params.outer_m * params.inner_n
    stream = derive_stream((params.master_seed, _TAG_COSA),
                           params.coefficient_a, space.dimension)
    point = np.zeros(space.dimension)
    value = _backend.local_search(f, stream.coefficient_a, stream.state,
                                  space.lower, space.upper, total,
                                  point, float("inf"))
    return OptResult(best_point=point, best_value=float(value),
                     evaluations_used=total,
                     stage_trace=[("search", float(value))])


def stage_widths(space, gamma, outer_m):
    """Pre-clamp box widths used by each stage of the staged-shrinkage
    baseline: original widths scaled by gamma**stage."""
    return [space.widths * gamma**stage for stage in range(outer_m)]


def vrr_optimize(f, space, vrr):
    """M stages of N chaos iterations; after each stage the box recenters on
    the best point and every width is multiplied by the reduction rate
    (clamped to the original box). Budget is exactly M * N."""
    params = vrr.base
    gamma = vrr.reduction_rate
    best = Candidate(point=np.zeros(space.dimension), value=float("inf"))
    box = space
    trace = []
    for stage in range(params.outer_m):
        stream = derive_stream((params.master_seed, _TAG_VRR, stage),
                               params.coefficient_a, space.dimension)
        point = best.point.copy()
        value = _backend.local_search(f, stream.coefficient_a, stream.state,
                                      box.lower, box.upper, params.inner_n,
                                      point, best.value)
        best = Candidate(point=point, value=float(value))
        trace.append((f"stage{stage}", best.value))
        half = space.widths * (gamma ** (stage + 1)) / 2.0
        box = SearchSpace(lower=np.maximum(space.lower, best.point - half),
                          upper=np.minimum(space.upper, best.point + half))
    return OptResult(best_point=best.point, best_value=best.value,
                     evaluations_used=params.outer_m * params.inner_n,
                     stage_trace=trace)
