"""Multi-seed experiments, nadir benchmarks and rank-sum comparisons with CSV/JSON output.

Run ``i`` of a cell uses seed ``seed + i``, so any single run can be
replayed in isolation. Every file written here is a pure function of the
spec, which keeps repeated experiments byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import ConfigError, RandomSource
from .engine import EngineConfig, RunRecord, run, run_random_baseline
from .metrics import hv_normalized, rank_sum_test
from .nadir import DnpeConfig, run_dnpe
from .problems import PROBLEM_IDS, make_problem
from .refpoints import LayerConfig
from .variation import VariationConfig

ALPHA = 0.05
NADIR_PROBLEMS = ("dtlz1", "dtlz2", "wfg2")
NADIR_MS = (8, 10, 15, 20)
NADIR_CAP = 100_000
# seed of the sampling stream used for Monte Carlo hypervolume in summaries
HV_SEED = 0
INDICATORS = ("igd", "hv")
# lower is better for IGD, higher for hypervolume
_LOWER_IS_BETTER = {"igd": True, "hv": False}


@dataclass(frozen=True)
class ExperimentSpec:
    problems: tuple[tuple[str, int], ...]
    out: str
    runs: int = 30
    budget: int | dict[int, int] = 25_000
    seed: int = 0
    engine: dict = field(default_factory=dict)
    baseline: bool = False
    workers: int = 1

    def __post_init__(self):
        if not self.problems:
            raise ConfigError("an experiment needs at least one (problem, m) cell")
        for pid, m in self.problems:
            if pid not in PROBLEM_IDS:
                raise ConfigError(f"unknown problem {pid!r}")
            if int(m) < 2:
                raise ConfigError(f"{pid}: m must be at least 2")
        if self.runs < 1:
            raise ConfigError("runs must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        budgets = self.budget.values() if isinstance(self.budget, dict) else [self.budget]
        if any(int(b) <= 0 for b in budgets):
            raise ConfigError("budgets must be positive")
        unknown = set(self.engine) - _ENGINE_OVERRIDES
        if unknown:
            raise ConfigError(f"unknown engine overrides: {sorted(unknown)}")

    def budget_for(self, m: int) -> int:
        if isinstance(self.budget, dict):
            if m not in self.budget:
                raise ConfigError(f"no budget given for m={m}")
            return int(self.budget[m])
        return int(self.budget)

    @classmethod
    def from_dict(cls, data: dict) -> ExperimentSpec:
        try:
            problems = tuple((str(p["id"]), int(p["m"])) for p in data["problems"])
            budget = data.get("budget", 25_000)
            if isinstance(budget, dict):
                budget = {int(k): int(v) for k, v in budget.items()}
            return cls(
                problems=problems,
                out=str(data["out"]),
                runs=int(data.get("runs", 30)),
                budget=budget,
                seed=int(data.get("seed", 0)),
                engine=dict(data.get("engine", {})),
                baseline=bool(data.get("baseline", False)),
                workers=int(data.get("workers", 1)),
            )
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"malformed experiment spec: {exc}") from exc

    @classmethod
    def load(cls, path: str | os.PathLike) -> ExperimentSpec:
        with open(path, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{path}: not valid JSON ({exc})") from exc
        return cls.from_dict(data)


_ENGINE_OVERRIDES = {"layers", "dnpe", "variation", "dnpe_budget_fraction", "track_igd"}


def engine_config(problem_id: str, m: int, budget: int, seed: int, overrides: dict) -> EngineConfig:
    """Build an EngineConfig, turning nested override dicts into their config types."""
    kwargs = {}
    for key, value in overrides.items():
        if key == "layers":
            value = LayerConfig.parse(value) if isinstance(value, str) else LayerConfig(**value)
        elif key == "dnpe":
            value = DnpeConfig(**value)
        elif key == "variation":
            value = VariationConfig(**value)
        kwargs[key] = value
    try:
        return EngineConfig(problem_id, m, budget, seed, **kwargs)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    path.write_text(buf.getvalue(), encoding="utf-8", newline="")


def read_csv(path: str | os.PathLike) -> tuple[list[str], list[dict[str, str]]]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        return list(reader.fieldnames or []), list(reader)


def _ensure_writable(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    probe = out / ".write-probe"
    probe.write_text("", encoding="utf-8")
    probe.unlink()


def record_indicators(record: RunRecord, problem_id: str, m: int) -> dict[str, float | None]:
    hv = hv_normalized(record.objectives, problem_id, m, rng=RandomSource(HV_SEED))
    return {"igd": record.final_igd, "hv": hv}


def _cell_name(problem_id: str, m: int) -> str:
    return f"{problem_id}_m{m}"


def _run_one(task: tuple[str, str, int, int, int, dict]) -> tuple[str, dict]:
    algorithm, problem_id, m, budget, seed, overrides = task
    cfg = engine_config(problem_id, m, budget, seed, overrides)
    record = run(cfg) if algorithm == "maoea-igd" else run_random_baseline(cfg)
    return record.to_json(), record_indicators(record, problem_id, m)


def _summary_stats(values: list[float]) -> tuple[float, float, float]:
    arr = np.asarray(values, dtype=float)
    std = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
    return float(arr.mean()), std, float(np.median(arr))


def comparison_mark(a: list[float], b: list[float], lower_is_better: bool) -> tuple[float | None, str]:
    """Rank-sum p-value and a ``+``/``=``/``-`` mark for ``a`` against ``b``.

    ``+`` means ``a`` is significantly better at the 5% level, judged by the
    direction of the medians; ``=`` means no significant difference.
    """
    if len(a) < 2 or len(b) < 2:
        return None, "="
    _, p = rank_sum_test(a, b)
    if p >= ALPHA:
        return p, "="
    better = np.median(a) < np.median(b) if lower_is_better else np.median(a) > np.median(b)
    return p, "+" if better else "-"


SUMMARY_HEADER = ["problem", "m", "algorithm", "indicator", "runs", "mean", "std", "median", "p_vs_baseline", "mark"]
CELL_HEADER = ["run", "seed", "algorithm", "evaluations", "igd", "hv"]


def summarize(cells: dict[tuple[str, int], list[dict]]) -> list[list]:
    """Summary rows from per-cell run rows (as written to the cell CSVs)."""
    rows = []
    for (pid, m), runs in cells.items():
        algorithms = sorted({r["algorithm"] for r in runs})
        values = {
            (alg, ind): [float(r[ind]) for r in runs if r["algorithm"] == alg and r[ind] not in (None, "")]
            for alg in algorithms
            for ind in INDICATORS
        }
        for alg in algorithms:
            for ind in INDICATORS:
                vals = values[(alg, ind)]
                if not vals:
                    continue
                mean, std, median = _summary_stats(vals)
                p, mark = None, ""
                if alg != "random-search" and "random-search" in algorithms:
                    p, mark = comparison_mark(vals, values[("random-search", ind)], _LOWER_IS_BETTER[ind])
                rows.append([pid, m, alg, ind, len(vals), mean, std, median, p, mark])
    return rows


def run_experiment(spec: ExperimentSpec) -> list[list]:
    """Run every cell, write per-run JSON, per-cell CSV and ``summary.csv``; return the summary rows."""
    out = Path(spec.out)
    _ensure_writable(out)
    (out / "runs").mkdir(exist_ok=True)
    (out / "cells").mkdir(exist_ok=True)
    algorithms = ["maoea-igd"] + (["random-search"] if spec.baseline else [])

    tasks = []
    for pid, m in spec.problems:
        budget = spec.budget_for(m)
        # validate every config before spending any evaluations
        engine_config(pid, m, budget, spec.seed, spec.engine)
        for alg in algorithms:
            for i in range(spec.runs):
                tasks.append((alg, pid, m, budget, spec.seed + i, spec.engine))

    if spec.workers > 1:
        with ProcessPoolExecutor(spec.workers) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]

    cells: dict[tuple[str, int], list[dict]] = {}
    for task, (text, indicators) in zip(tasks, results):
        alg, pid, m, _, seed, _ = task
        run_index = seed - spec.seed
        suffix = "" if alg == "maoea-igd" else "_baseline"
        (out / "runs" / f"{_cell_name(pid, m)}{suffix}_run{run_index:03d}.json").write_text(text, encoding="utf-8")
        evaluations = json.loads(text)["evaluations"]
        cells.setdefault((pid, m), []).append(
            {"run": run_index, "seed": seed, "algorithm": alg, "evaluations": evaluations, **indicators}
        )

    for (pid, m), runs in cells.items():
        write_csv(out / "cells" / f"{_cell_name(pid, m)}.csv", CELL_HEADER, [[r[h] for h in CELL_HEADER] for r in runs])
    summary = summarize(cells)
    write_csv(out / "summary.csv", SUMMARY_HEADER, summary)
    return summary


NADIR_HEADER = ["problem", "m", "seed", "evaluations", "error", "exhausted"]


def nadir_experiment(
    out: str | os.PathLike,
    problems=NADIR_PROBLEMS,
    ms=NADIR_MS,
    seeds: int = 5,
    cap: int = NADIR_CAP,
    seed: int = 0,
    extra: tuple[tuple[str, int], ...] = (),
) -> list[list]:
    """Nadir estimation on benchmarks with a published nadir point.

    Each axis gets ``cap // m`` evaluations and stops early once its error
    share reaches ``0.01 / m``. ``exhausted`` is set when any axis ran out of
    budget before reaching its tolerance. Writes ``nadir.csv``.
    """
    out = Path(out)
    _ensure_writable(out)
    cells = [(p, m) for p in problems for m in ms] + list(extra)
    rows = []
    for pid, m in cells:
        if pid not in NADIR_PROBLEMS:
            raise ConfigError(f"no published nadir point for {pid}")
        if cap < m:
            raise ConfigError(f"cap {cap} cannot give every one of {m} axes an evaluation")
        cfg = DnpeConfig(per_extreme_eval_budget=cap // m)
        problem = make_problem(pid, m)
        for s in range(seed, seed + seeds):
            report = run_dnpe(problem, cfg, RandomSource(s))
            rows.append([pid, m, s, report.evaluations_used, report.error, not all(report.axis_converged)])
    write_csv(out / "nadir.csv", NADIR_HEADER, rows)
    return rows


COMPARE_HEADER = ["indicator", "algorithm_a", "algorithm_b", "median_a", "median_b", "u", "p", "mark"]


def compare(path_a: str | os.PathLike, path_b: str | os.PathLike) -> list[list]:
    """Rank-sum comparison of two cell CSVs, indicator by indicator.

    Only the first algorithm found in each file is used.
    """
    _, rows_a = read_csv(path_a)
    _, rows_b = read_csv(path_b)
    if not rows_a or not rows_b:
        raise ConfigError("both cell files need at least one run")
    alg_a, alg_b = rows_a[0]["algorithm"], rows_b[0]["algorithm"]
    result = []
    for ind in INDICATORS:
        a = [float(r[ind]) for r in rows_a if r["algorithm"] == alg_a and r.get(ind)]
        b = [float(r[ind]) for r in rows_b if r["algorithm"] == alg_b and r.get(ind)]
        if len(a) < 2 or len(b) < 2:
            continue
        u, _ = rank_sum_test(a, b)
        p, mark = comparison_mark(a, b, _LOWER_IS_BETTER[ind])
        result.append([ind, alg_a, alg_b, float(np.median(a)), float(np.median(b)), u, p, mark])
    return result

