"""Command-line front end.

Subcommands:
  optimize  run one seeded optimization on a named benchmark
  bench     run the repeated-trial experiment grid, write CSV, print a table
  surface   write an x1,x2,f grid of a benchmark for external plotting

Option precedence: built-in defaults < config file (plain ``key = value``
lines, see --config) < command-line flags. Data output is byte-reproducible
under a fixed --seed; timing lines are not.
"""

import argparse
import sys
import time

import numpy as np

from . import _backend, benchmarks, harness
from .baselines import VrrParams
from .engine import SearchParams

DISPLAY_DIGITS = 6
CSV_DIGITS = 17

_DEFAULTS = {
    "N": 20000,
    "M": 8,
    "p": 10,
    "A": 4.0,
    "gamma": 0.7,
    "seed": 0,
    "tolerance": 1e-3,
    "trials": 100,
    "threads": 1,
}


def _parse_config_file(path):
    values = {}
    casts = {k: type(v) for k, v in _DEFAULTS.items()}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in casts:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = casts[key](value.strip())
    return values


def _setting(args, config, key):
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    if key in config:
        return config[key]
    return _DEFAULTS[key]


def _search_params(args, config):
    return SearchParams(inner_n=_setting(args, config, "N"),
                        outer_m=_setting(args, config, "M"),
                        initial_p=_setting(args, config, "p"),
                        coefficient_a=_setting(args, config, "A"),
                        master_seed=_setting(args, config, "seed"))


def _fmt_tol(value):
    mantissa, _, exponent = f"{value:e}".partition("e")
    mantissa = mantissa.rstrip("0").rstrip(".")
    return f"{mantissa}e{int(exponent)}"


def cmd_optimize(args):
    config = _parse_config_file(args.config) if args.config else {}
    try:
        spec = benchmarks.get_benchmark(args.benchmark)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 1
    if args.algorithm not in harness.ALGORITHM_NAMES:
        print(f"error: unknown algorithm {args.algorithm!r} "
              f"(expected one of {', '.join(harness.ALGORITHM_NAMES)})",
              file=sys.stderr)
        return 1
    params = _search_params(args, config)
    if args.algorithm == "vrr":
        params = VrrParams(base=params,
                           reduction_rate=_setting(args, config, "gamma"))
    threads = _setting(args, config, "threads")
    start = time.perf_counter()
    if args.algorithm == "apcosa":
        from .engine import optimize
        result = optimize(spec.objective, spec.space, params, threads=threads)
    else:
        result = harness.run_algorithm(args.algorithm, spec, params)
    elapsed = time.perf_counter() - start
    g = DISPLAY_DIGITS
    print(f"algorithm {args.algorithm}")
    print(f"benchmark {spec.name}")
    print("best_point " + " ".join(f"{v:.{g}g}" for v in result.best_point))
    print(f"best_value {result.best_value:.{g}g}")
    print(f"evaluations {result.evaluations_used}")
    print(f"time_seconds {elapsed:.4f}")
    return 0


def cmd_bench(args):
    config = _parse_config_file(args.config) if args.config else {}
    bench_names = args.benchmarks or list("F" + str(i) for i in range(1, 6))
    algo_names = args.algorithms or list(harness.ALGORITHM_NAMES)
    for name in bench_names:
        try:
            benchmarks.get_benchmark(name)
        except KeyError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return 1
    for name in algo_names:
        if name not in harness.ALGORITHM_NAMES:
            print(f"error: unknown algorithm {name!r}", file=sys.stderr)
            return 1
    seed = _setting(args, config, "seed")
    tolerance = _setting(args, config, "tolerance")
    trials = _setting(args, config, "trials")
    base = _search_params(args, config)
    params = {
        "cosa": base,
        "apcosa": base,
        "vrr": VrrParams(base=base,
                         reduction_rate=_setting(args, config, "gamma")),
    }
    cfg = harness.TrialConfig(trials=trials, success_tolerance=tolerance,
                              algorithms=tuple(algo_names),
                              benchmarks=tuple(bench_names),
                              params=params, master_seed=seed)
    print(f"trials={trials} epsilon={_fmt_tol(tolerance)} seed={seed} "
          f"backend={_backend.backend_name()}")
    report = harness.run_experiment(cfg)
    try:
        with open(args.output, "w") as fh:
            fh.write(harness.emit_csv(report))
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 1
    print(harness.emit_table(report), end="")
    print(f"wrote {args.output}")
    return 0


def cmd_surface(args):
    try:
        spec = benchmarks.get_benchmark(args.benchmark)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 1
    if args.resolution < 2:
        print("error: resolution must be at least 2", file=sys.stderr)
        return 1
    # linspace includes both box endpoints exactly; rows are written with x1
    # varying fastest.
    xs = np.linspace(spec.space.lower[0], spec.space.upper[0], args.resolution)
    ys = np.linspace(spec.space.lower[1], spec.space.upper[1], args.resolution)
    g = CSV_DIGITS
    lines = ["x1,x2,f"]
    for x2 in ys:
        for x1 in xs:
            f = spec.objective(np.array([x1, x2]))
            lines.append(f"{x1:.{g}g},{x2:.{g}g},{f:.{g}g}")
    text = "\n".join(lines) + "\n"
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return 1
        print(f"wrote {args.output}")
    else:
        print(text, end="")
    return 0


def _add_param_flags(parser):
    parser.add_argument("-N", "--inner-n", dest="N", type=int,
                        help="inner iteration count per stage")
    parser.add_argument("-M", "--outer-m", dest="M", type=int,
                        help="outer iteration count (>= 3)")
    parser.add_argument("-p", "--initial-p", dest="p", type=int,
                        help="initial candidate point count")
    parser.add_argument("-A", "--coefficient-a", dest="A", type=float,
                        help="logistic map coefficient")
    parser.add_argument("--gamma", dest="gamma", type=float,
                        help="reduction rate for the vrr baseline")
    parser.add_argument("--seed", dest="seed", type=int, help="master seed")
    parser.add_argument("--threads", dest="threads", type=int,
                        help="worker threads for the parallel stage")
    parser.add_argument("--config", help="key = value config file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chaosearch",
        description="Chaos-driven derivative-free global optimization "
                    "and benchmark harness")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_opt = sub.add_parser("optimize", help="run one seeded optimization")
    p_opt.add_argument("--benchmark", required=True, help="benchmark name F1..F5")
    p_opt.add_argument("--algorithm", default="apcosa",
                       help="one of cosa, vrr, apcosa")
    _add_param_flags(p_opt)
    p_opt.set_defaults(func=cmd_optimize)

    p_bench = sub.add_parser("bench", help="run the repeated-trial experiment")
    p_bench.add_argument("--trials", dest="trials", type=int,
                         help="trials per (algorithm, benchmark) pair")
    p_bench.add_argument("--tolerance", dest="tolerance", type=float,
                         help="success tolerance on |best - reference|")
    p_bench.add_argument("--benchmarks", nargs="+", help="subset of F1..F5")
    p_bench.add_argument("--algorithms", nargs="+",
                         help="subset of cosa, vrr, apcosa")
    p_bench.add_argument("--output", default="experiment.csv",
                         help="CSV output path")
    _add_param_flags(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    p_surf = sub.add_parser("surface", help="write a benchmark surface grid")
    p_surf.add_argument("--benchmark", required=True, help="benchmark name F1..F5")
    p_surf.add_argument("--resolution", type=int, default=101,
                        help="grid points per axis (>= 2)")
    p_surf.add_argument("--output", help="CSV output path (default: stdout)")
    p_surf.set_defaults(func=cmd_surface)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
