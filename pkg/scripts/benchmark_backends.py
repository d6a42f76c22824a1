"""Compare the compiled kernels against the pure-Python fallback.

Runs the full optimizer on each built-in benchmark with both backends and
reports wall time per run plus the speedup. Also verifies that the two
backends agree bit for bit before timing anything.

Usage:
    python scripts/benchmark_backends.py [--repeats 5] [-N 20000] [--seed 0]
"""

import argparse
import sys
import time

import numpy as np

from chaosearch import _backend
from chaosearch.benchmarks import registry
from chaosearch.engine import SearchParams, optimize


def time_backend(name, spec, params, repeats):
    _backend.set_backend(name)
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = optimize(spec.objective, spec.space, params)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats per backend (best is kept)")
    parser.add_argument("-N", type=int, default=20000,
                        help="chaos iterations per stage")
    parser.add_argument("-M", type=int, default=8, help="number of stages")
    parser.add_argument("-p", type=int, default=10, help="initial candidates")
    parser.add_argument("--seed", type=int, default=0, help="master seed")
    args = parser.parse_args(argv)

    if not _backend.have_compiled():
        print("compiled kernels are not built; nothing to compare",
              file=sys.stderr)
        return 1

    params = SearchParams(inner_n=args.N, outer_m=args.M, initial_p=args.p,
                          master_seed=args.seed)
    print(f"N={args.N} M={args.M} p={args.p} seed={args.seed} "
          f"repeats={args.repeats}")
    print(f"{'benchmark':<10} {'compiled_ms':>12} {'python_ms':>12} "
          f"{'speedup':>8}")
    try:
        for spec in registry():
            c_time, c_res = time_backend("compiled", spec, params,
                                         args.repeats)
            p_time, p_res = time_backend("python", spec, params, args.repeats)
            assert c_res.best_value == p_res.best_value, spec.name
            assert np.array_equal(c_res.best_point, p_res.best_point), spec.name
            print(f"{spec.name:<10} {c_time * 1e3:>12.2f} {p_time * 1e3:>12.2f} "
                  f"{p_time / c_time:>7.1f}x")
    finally:
        _backend.set_backend("compiled")
    return 0


if __name__ == "__main__":
    sys.exit(main())
