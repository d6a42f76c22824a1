"""Five-stage parallel chaos search.

Pipeline: (1) random initial candidates, (2) global rough sweep of the full
box updating nearest candidates, (3) de-duplication of candidates closer than
the neighbor distance, (4) independent local chaos searches around each
survivor in factorially shrinking boxes, (5) a final fine sweep around the
overall best point.

Total objective evaluations: p + N + (M-2) * p' * floor(N/p') + N, where p'
is the candidate count surviving stage 3.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .chaos import (
    ChaosStream,
    DegenerateSeed,
    DimensionMismatch,
    SearchSpace,
    validate_seed,
)

# Seed-derivation tags, one per randomized stage.
_TAG_INIT = 1
_TAG_ROUGH = 2
_TAG_PARALLEL = 4
_TAG_FINE = 5


class InvalidParams(ValueError):
    """Search parameters violate their constraints."""


class FactorialOverflow(OverflowError):
    """Factorial shrinkage denominator exceeds the representable range."""


@dataclass
class SearchParams:
    """Tuning knobs: inner iterations N, outer iterations M, initial points p."""

    inner_n: int = 20000
    outer_m: int = 8
    initial_p: int = 10
    coefficient_a: float = 4.0
    master_seed: int = 0

    def __post_init__(self):
        if self.inner_n < 1:
            raise InvalidParams("inner_n must be a positive integer")
        if self.outer_m < 3:
            raise InvalidParams("outer_m must be at least 3")
        if self.initial_p < 1:
            raise InvalidParams("initial_p must be a positive integer")


@dataclass
class Candidate:
    """A decision vector with its cached objective value."""

    point: np.ndarray
    value: float


@dataclass
class OptResult:
    best_point: np.ndarray
    best_value: float
    evaluations_used: int
    stage_trace: list = field(default_factory=list)


def derive_stream(key, coefficient_a, dimension):
    """Deterministically derive a validated chaos stream from an integer key
    tuple; used so stage-4 workers are independent of execution order.

    Uniform components come straight from the seed sequence's hash expansion
    (cheaper than instantiating a full generator); degenerate draws fall
    through to the next block of words.
    """
    ss = np.random.SeedSequence(key)
    blocks = max(16 // dimension, 2)
    while True:
        words = ss.generate_state(blocks * dimension, np.uint64)
        unit = (words >> np.uint64(11)) * 2.0 ** -53
        for b in range(blocks):
            try:
                state = validate_seed(unit[b * dimension:(b + 1) * dimension])
            except (DegenerateSeed, ValueError):
                continue
            return ChaosStream(state=state, coefficient_a=coefficient_a)
        blocks *= 2


def init_candidates(space, f, p, rng):
    """Stage 1: p uniform random points in the box, each evaluated once."""
    points = space.lower + space.widths * rng.random((p, space.dimension))
    return [Candidate(point=points[i].copy(), value=float(f(points[i])))
            for i in range(p)]


def rough_search(candidates, space, f, n_iters, stream):
    """Stage 2: N chaos iterates over the full box; each replaces its nearest
    candidate (Euclidean, ties to the lowest index) on strict improvement."""
    points = np.array([c.point for c in candidates], dtype=float)
    values = np.array([c.value for c in candidates], dtype=float)
    _backend.rough_search(f, stream.coefficient_a, stream.state,
                          space.lower, space.upper, n_iters, points, values)
    for i, cand in enumerate(candidates):
        cand.point = points[i]
        cand.value = float(values[i])
    return candidates


def neighbor_distance(space, p):
    """Threshold below which two candidates count as one basin:
    sqrt(sum of squared widths) / (2p)."""
    return math.sqrt(float(np.sum(space.widths ** 2))) / (2.0 * p)


def eliminate_neighbors(candidates, d_near):
    """Stage 3: repeatedly find a pair closer than d_near and drop the worse
    point (ties: the higher index), until all pairs are separated."""
    survivors = list(candidates)
    removed = True
    while removed:
        removed = False
        for i in range(len(survivors)):
            for j in range(i + 1, len(survivors)):
                dist = float(np.linalg.norm(survivors[i].point - survivors[j].point))
                if dist < d_near:
                    loser = j if survivors[i].value <= survivors[j].value else i
                    del survivors[loser]
                    removed = True
                    break
            if removed:
                break
    return survivors


def _shrunk_box(center_point, space, denominator):
    half = space.widths / denominator
    if not np.all(half > 0.0):
        raise FactorialOverflow("shrinkage denominator underflows the box width")
    return SearchSpace(
        lower=np.maximum(space.lower, center_point - half),
        upper=np.minimum(space.upper, center_point + half),
    )


def _factorial_denominator(p_prime, m):
    try:
        return 2.0 * p_prime * float(math.factorial(m))
    except OverflowError as exc:
        raise FactorialOverflow(f"{m}! is not representable as a float") from exc


def reduced_bounds(center, space, p_prime, m):
    """Stage-4 substage box: half-width (b-a) / (2 p' m!) around the
    candidate, clamped to the original box."""
    if m < 1:
        raise InvalidParams("substage index m must be at least 1")
    return _shrunk_box(center.point, space, _factorial_denominator(p_prime, m))


def fine_bounds(best, space, p_prime, outer_m):
    """Stage-5 box: half-width (b-a) / (2 p' (M-1)!), clamped to the box."""
    if outer_m < 3:
        raise InvalidParams("outer_m must be at least 3")
    return _shrunk_box(best.point, space,
                       _factorial_denominator(p_prime, outer_m - 1))


def local_chaos_search(center, sub_space, f, n_iters, stream):
    """Chaos search of one sub-box, keeping the center's best-so-far value."""
    point = center.point.copy()
    value = _backend.local_search(f, stream.coefficient_a, stream.state,
                                  sub_space.lower, sub_space.upper,
                                  n_iters, point, center.value)
    return Candidate(point=point, value=float(value))


def parallel_search(candidates, space, f, params, threads=1):
    """Stage 4: M-2 shrinking substages around every candidate, each substage
    recentered on the candidate's current point with floor(N/p') iterations.

    Candidates are independent; per-(candidate, substage) chaos seeds are
    derived from the master seed, so any execution order gives the same
    result. Returns the updated candidate list (same order).
    """
    p_prime = len(candidates)
    n_prime = params.inner_n // p_prime

    def refine(index_candidate):
        l, cand = index_candidate
        current = cand
        for m in range(1, params.outer_m - 1):
            box = reduced_bounds(current, space, p_prime, m)
            stream = derive_stream((params.master_seed, _TAG_PARALLEL, l, m),
                                   params.coefficient_a, space.dimension)
            current = local_chaos_search(current, box, f, n_prime, stream)
        return current

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(refine, enumerate(candidates)))
    return [refine(item) for item in enumerate(candidates)]


def fine_search(best, space, f, n_iters, stream, p_prime, outer_m):
    """Stage 5: N iterations inside the fine box around the best candidate."""
    box = fine_bounds(best, space, p_prime, outer_m)
    return local_chaos_search(best, box, f, n_iters, stream)


def _best_index(candidates):
    return min(range(len(candidates)), key=lambda i: candidates[i].value)


def optimize(f, space, params, threads=1):
    """Run the full five-stage pipeline and return the best point found."""
    dim = getattr(f, "dimension", None)
    if dim is not None and dim != space.dimension:
        raise DimensionMismatch(
            f"objective dimension {dim} != space dimension {space.dimension}"
        )
    n, m_outer, p = params.inner_n, params.outer_m, params.initial_p
    a = params.coefficient_a
    trace = []

    rng = np.random.default_rng(
        np.random.SeedSequence((params.master_seed, _TAG_INIT)))
    candidates = init_candidates(space, f, p, rng)
    evaluations = p
    trace.append(("init", candidates[_best_index(candidates)].value))

    stream = derive_stream((params.master_seed, _TAG_ROUGH), a, space.dimension)
    rough_search(candidates, space, f, n, stream)
    evaluations += n
    trace.append(("rough", candidates[_best_index(candidates)].value))

    candidates = eliminate_neighbors(candidates, neighbor_distance(space, p))
    p_prime = len(candidates)
    trace.append(("eliminate", candidates[_best_index(candidates)].value))

    candidates = parallel_search(candidates, space, f, params, threads=threads)
    evaluations += (m_outer - 2) * p_prime * (n // p_prime)
    trace.append(("parallel", candidates[_best_index(candidates)].value))

    best = candidates[_best_index(candidates)]
    stream = derive_stream((params.master_seed, _TAG_FINE), a, space.dimension)
    final = fine_search(best, space, f, n, stream, p_prime, m_outer)
    evaluations += n
    trace.append(("fine", final.value))

    return OptResult(best_point=final.point, best_value=final.value,
                     evaluations_used=evaluations, stage_trace=trace)
