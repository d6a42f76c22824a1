"""Repeated-trial experiments: success frequency and timing per algorithm per
benchmark, with CSV and plain-text table serialization.

Success is value-based: a trial succeeds when |best - reference| <= tolerance.
This handles benchmarks with several global minimizers. Per-trial seeds are
derived from the master seed keyed by (algorithm, benchmark, trial), so no two
trials share a chaos trajectory.
"""

import dataclasses
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from . import baselines, benchmarks, engine
from .baselines import VrrParams
from .engine import InvalidParams, SearchParams

ALGORITHM_NAMES = ("cosa", "vrr", "apcosa")


def default_params(algorithm, master_seed=0):
    base = SearchParams(master_seed=master_seed)
    if algorithm == "vrr":
        return VrrParams(base=base)
    return base


def run_algorithm(algorithm, spec, params):
    if algorithm == "apcosa":
        return engine.optimize(spec.objective, spec.space, params)
    if algorithm == "cosa":
        return baselines.cosa_optimize(spec.objective, spec.space, params)
    if algorithm == "vrr":
        return baselines.vrr_optimize(spec.objective, spec.space, params)
    raise KeyError(f"unknown algorithm {algorithm!r}")


def _with_seed(params, seed):
    if isinstance(params, VrrParams):
        return dataclasses.replace(
            params, base=dataclasses.replace(params.base, master_seed=seed))
    return dataclasses.replace(params, master_seed=seed)


def trial_seed(master_seed, algorithm_index, benchmark_index, trial):
    ss = np.random.SeedSequence(
        (master_seed, algorithm_index, benchmark_index, trial))
    return int(ss.generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class TrialConfig:
    trials: int = 100
    success_tolerance: float = 1e-3
    algorithms: tuple = ALGORITHM_NAMES
    benchmarks: tuple = ("F1", "F2", "F3", "F4", "F5")
    params: dict = None  # algorithm name -> params; defaults filled per run
    master_seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidParams("trials must be at least 1")
        if self.success_tolerance <= 0.0:
            raise InvalidParams("success_tolerance must be positive")
        for name in self.algorithms:
            if name not in ALGORITHM_NAMES:
                raise KeyError(f"unknown algorithm {name!r}")

    def params_for(self, algorithm):
        if self.params and algorithm in self.params:
            return self.params[algorithm]
        return default_params(algorithm, self.master_seed)


@dataclass(frozen=True)
class TrialRecord:
    algorithm: str
    benchmark: str
    trial: int
    seed: int
    best_value: float
    success: bool
    time_seconds: float


@dataclass
class ExperimentReport:
    trials: int
    success_tolerance: float
    algorithms: tuple
    benchmarks: tuple
    records: list = field(default_factory=list)

    def _select(self, algorithm, benchmark):
        return [r for r in self.records
                if r.algorithm == algorithm and r.benchmark == benchmark]

    def success_count(self, algorithm, benchmark):
        return sum(r.success for r in self._select(algorithm, benchmark))

    def median_time(self, algorithm, benchmark, successful_only=False):
        rows = self._select(algorithm, benchmark)
        if successful_only:
            rows = [r for r in rows if r.success]
        if not rows:
            return float("nan")
        return statistics.median(r.time_seconds for r in rows)

    def mean_best_value(self, algorithm, benchmark):
        rows = self._select(algorithm, benchmark)
        if not rows:
            return float("nan")
        return statistics.fmean(r.best_value for r in rows)


def run_experiment(config):
    """Run the full (algorithm, benchmark, trial) grid of a TrialConfig."""
    report = ExperimentReport(trials=config.trials,
                              success_tolerance=config.success_tolerance,
                              algorithms=tuple(config.algorithms),
                              benchmarks=tuple(config.benchmarks))
    for ai, algorithm in enumerate(config.algorithms):
        base_params = config.params_for(algorithm)
        for bi, bench_name in enumerate(config.benchmarks):
            spec = benchmarks.get_benchmark(bench_name)
            for t in range(config.trials):
                seed = trial_seed(config.master_seed, ai, bi, t)
                params = _with_seed(base_params, seed)
                start = time.perf_counter()
                result = run_algorithm(algorithm, spec, params)
                elapsed = time.perf_counter() - start
                gap = abs(result.best_value - spec.reference_value)
                report.records.append(TrialRecord(
                    algorithm=algorithm, benchmark=bench_name, trial=t,
                    seed=seed, best_value=result.best_value,
                    success=gap <= config.success_tolerance,
                    time_seconds=elapsed))
    return report


CSV_HEADER = "algorithm,benchmark,trial,seed,best_value,success,time_seconds"


def emit_csv(report):
    """One row per trial, 17 significant digits, deterministic order."""
    lines = [CSV_HEADER]
    for r in report.records:
        lines.append(
            f"{r.algorithm},{r.benchmark},{r.trial},{r.seed},"
            f"{r.best_value:.17g},{int(r.success)},{r.time_seconds:.17g}")
    return "\n".join(lines) + "\n"


def parse_csv(text):
    """Inverse of emit_csv; returns TrialRecord rows."""
    lines = [ln for ln in text.splitlines() if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("missing or malformed CSV header")
    records = []
    for line in lines[1:]:
        alg, bench, trial, seed, best, success, secs = line.split(",")
        records.append(TrialRecord(
            algorithm=alg, benchmark=bench, trial=int(trial), seed=int(seed),
            best_value=float(best), success=bool(int(success)),
            time_seconds=float(secs)))
    return records


def emit_table(report):
    """Aligned summary: one row per benchmark, per-algorithm success
    frequency (as k/trials) and median time columns."""
    algorithms = report.algorithms
    header = ["benchmark"]
    for name in algorithms:
        header += [f"{name} success", f"{name} median_s"]
    rows = [header]
    for bench in report.benchmarks:
        row = [bench]
        for name in algorithms:
            row.append(f"{report.success_count(name, bench)}/{report.trials}")
            row.append(f"{report.median_time(name, bench):.4f}")
        rows.append(row)
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
             for r in rows]
    return "\n".join(lines) + "\n"
