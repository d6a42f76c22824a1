"""Chaos-driven derivative-free global optimization over box constraints.

Public surface: the five-stage parallel chaos search (:func:`optimize`), two
reconstructed baselines, the benchmark registry, and the experiment harness.
Hot loops run in a compiled extension when built, with a pure-Python fallback
selected at import time (see :func:`backend_name`).
"""

from ._backend import backend_name, have_compiled, set_backend
from .baselines import VrrParams, cosa_optimize, vrr_optimize
from .benchmarks import BenchmarkSpec, get_benchmark, registry
from .chaos import (
    ChaosStream,
    DegenerateSeed,
    DimensionMismatch,
    SearchSpace,
    chaos_sequence,
    logistic_step,
    scale_to_bounds,
    validate_seed,
)
from .engine import (
    Candidate,
    FactorialOverflow,
    InvalidParams,
    OptResult,
    SearchParams,
    optimize,
)
from .harness import ExperimentReport, TrialConfig, emit_csv, emit_table, run_experiment

__version__ = "0.1.0"

__all__ = [
    "BenchmarkSpec",
    "Candidate",
    "ChaosStream",
    "DegenerateSeed",
    "DimensionMismatch",
    "ExperimentReport",
    "FactorialOverflow",
    "InvalidParams",
    "OptResult",
    "SearchParams",
    "SearchSpace",
    "TrialConfig",
    "VrrParams",
    "backend_name",
    "chaos_sequence",
    "cosa_optimize",
    "emit_csv",
    "emit_table",
    "get_benchmark",
    "have_compiled",
    "logistic_step",
    "optimize",
    "registry",
    "run_experiment",
    "scale_to_bounds",
    "set_backend",
    "validate_seed",
    "vrr_optimize",
]
