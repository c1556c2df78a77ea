"""Command-line entry point: ``maoea-igd <subcommand> ...``.

Exit codes: 0 on success, 2 for invalid configuration, 3 for I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .core import BudgetExhausted, ConfigError, RandomSource
from .engine import EngineConfig, run, run_random_baseline
from .harness import (
    COMPARE_HEADER,
    NADIR_CAP,
    NADIR_MS,
    NADIR_PROBLEMS,
    ExperimentSpec,
    compare,
    nadir_experiment,
    run_experiment,
    write_csv,
)
from .metrics import DEFAULT_SAMPLES, MAX_EXACT_OBJECTIVES, hv_exact, hv_monte_carlo, igd
from .nadir import DnpeConfig, run_dnpe
from .problems import make_problem
from .refpoints import LayerConfig, to_utopian, two_layer

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3


def _floats(text: str) -> np.ndarray:
    try:
        return np.array([float(v) for v in text.split(",")])
    except ValueError as exc:
        raise ConfigError(f"expected comma-separated numbers, got {text!r}") from exc


def _load_points(path: str) -> np.ndarray:
    """Points from a comma-separated file; a non-numeric first line is taken as a header."""
    with open(path, encoding="utf-8") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if lines:
        try:
            _floats(lines[0])
        except ConfigError:
            lines = lines[1:]
    if not lines:
        raise ConfigError(f"{path}: no points")
    rows = [_floats(line) for line in lines]
    if len({len(r) for r in rows}) != 1:
        raise ConfigError(f"{path}: rows differ in length")
    return np.array(rows)


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer, got {text}")
    return value


def cmd_run(args) -> None:
    layers = LayerConfig.parse(args.divisions) if args.divisions else None
    cfg = EngineConfig(args.problem, args.m, args.budget, args.seed, layers=layers)
    record = run_random_baseline(cfg) if args.baseline else run(cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "run.json").write_text(record.to_json(), encoding="utf-8")
    header = [f"f{j + 1}" for j in range(args.m)]
    write_csv(out / "front.csv", header, record.objectives.tolist())


def cmd_experiment(args) -> None:
    run_experiment(ExperimentSpec.load(args.spec))


def cmd_nadir_bench(args) -> None:
    extra = (("wfg2", 3),) if args.ms is None else ()
    ms = NADIR_MS if args.ms is None else tuple(int(v) for v in args.ms.split(","))
    problems = NADIR_PROBLEMS if args.problems is None else tuple(args.problems.split(","))
    nadir_experiment(args.out, problems, ms, seeds=args.seeds, cap=args.cap, seed=args.seed, extra=extra)


def cmd_compare(args) -> None:
    rows = compare(args.a, args.b)
    print(",".join(COMPARE_HEADER))
    for row in rows:
        print(",".join("" if v is None else repr(v) if isinstance(v, float) else str(v) for v in row))


def cmd_refpoints(args) -> None:
    points = two_layer(args.m, LayerConfig.parse(args.divisions))
    if args.ideal is not None or args.nadir is not None:
        ideal = np.zeros(args.m) if args.ideal is None else _floats(args.ideal)
        nadir = np.ones(args.m) if args.nadir is None else _floats(args.nadir)
        points = to_utopian(points, ideal, nadir)
    lines = [",".join(f"{v:.17g}" for v in row) for row in points.points]
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")


def cmd_nadir(args) -> None:
    problem = make_problem(args.problem, args.m)
    cfg = DnpeConfig(lam=args.lam, per_extreme_eval_budget=max(args.budget // args.m, 0))
    if cfg.axis_budget(args.m) < 1:
        raise ConfigError(f"budget {args.budget} cannot give every one of {args.m} axes an evaluation")
    report = run_dnpe(problem, cfg, RandomSource(args.seed))
    out = report.to_dict()
    keys = ("extreme_points", "nadir", "ideal", "evaluations", "error")
    text = json.dumps({k: out[k] for k in keys}, sort_keys=True, indent=1) + "\n"
    Path(args.out).write_text(text, encoding="utf-8")


def cmd_metric(args) -> None:
    front = _load_points(args.front)
    reference = _load_points(args.reference)
    if args.kind in ("igd", "igdplus"):
        value = igd(reference, front, plus=args.kind == "igdplus")
    else:
        if len(reference) != 1:
            raise ConfigError("hv needs a reference file holding exactly one point")
        ref = reference[0]
        if args.samples is None and len(ref) <= MAX_EXACT_OBJECTIVES:
            value = hv_exact(front, ref)
        else:
            samples = DEFAULT_SAMPLES if args.samples is None else args.samples
            value = hv_monte_carlo(front, ref, RandomSource(args.seed), samples=samples)
    print(f"{value:.12g}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maoea-igd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="one optimization run")
    p.add_argument("--problem", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--divisions", help="reference lattice divisions, 'a' or 'a,b'")
    p.add_argument("--baseline", action="store_true", help="run random search instead")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("experiment", help="multi-seed experiment from a JSON spec")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("nadir-bench", help="nadir estimation benchmark")
    p.add_argument("--out", required=True)
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--cap", type=int, default=NADIR_CAP)
    p.add_argument("--problems", help="comma-separated subset of dtlz1,dtlz2,wfg2")
    p.add_argument("--ms", help="comma-separated objective counts")
    p.set_defaults(func=cmd_nadir_bench)

    p = sub.add_parser("compare", help="rank-sum comparison of two cell CSVs")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("refpoints", help="write a reference point lattice")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--divisions", required=True)
    p.add_argument("--ideal")
    p.add_argument("--nadir")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_refpoints)

    p = sub.add_parser("nadir", help="estimate the nadir point of a benchmark")
    p.add_argument("--problem", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=100.0)
    p.add_argument("--budget", type=int, default=NADIR_CAP)
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_nadir)

    p = sub.add_parser("metric", help="IGD, IGD+ or hypervolume of a front")
    p.add_argument("--kind", choices=("igd", "igdplus", "hv"), required=True)
    p.add_argument("--front", required=True)
    p.add_argument("--reference", required=True)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=_u64, default=0)
    p.set_defaults(func=cmd_metric)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ConfigError, BudgetExhausted, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
