"""Decomposition-based nadir point estimation.

Each extreme point is found by a single-objective GA minimizing
``|f_i| + lam * sum_{j != i} f_j**2``. With ``lam > 1`` the off-axis
objectives are pushed to zero first, which leaves the solution on the edge
of the front where ``f_i`` is largest. The nadir point is the diagonal of the
resulting extreme points and the ideal point their component-wise minimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    ConfigError,
    DegenerateRangeError,
    DimensionError,
    EvaluationCounter,
    Individual,
    Problem,
    RandomSource,
    evaluate_population,
)
from .variation import polynomial_mutation_batch, sbx_batch

DEFAULT_TOTAL_BUDGET = 100_000
DEFAULT_TOTAL_TOLERANCE = 0.01


@dataclass(frozen=True)
class DnpeConfig:
    """Settings for the per-axis GA.

    ``per_extreme_eval_budget=None`` means ``100000 // m`` and
    ``per_extreme_tolerance=None`` means ``0.01 / m``. The tolerance only
    applies when ``error_stop`` is set and the problem's true ideal and nadir
    points are known.
    """

    lam: float = 100.0
    population: int = 200
    per_extreme_eval_budget: int | None = None
    per_extreme_tolerance: float | None = None
    error_stop: bool = True
    crossover_prob: float = 0.9
    mutation_prob: float | None = None
    sbx_eta: float = 20.0
    mutation_eta: float = 20.0

    def __post_init__(self):
        if not self.lam > 1.0:
            raise ConfigError(f"lam must be greater than 1, got {self.lam}")
        if self.population < 2:
            raise ConfigError("GA population must hold at least two individuals")
        if self.per_extreme_eval_budget is not None and self.per_extreme_eval_budget < 0:
            raise ConfigError("per-extreme budget must be non-negative")
        if self.per_extreme_tolerance is not None and self.per_extreme_tolerance <= 0:
            raise ConfigError("per-extreme tolerance must be positive")
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ConfigError("crossover_prob must lie in [0, 1]")
        if self.mutation_prob is not None and not 0.0 <= self.mutation_prob <= 1.0:
            raise ConfigError("mutation_prob must lie in [0, 1]")

    def axis_budget(self, m: int) -> int:
        if self.per_extreme_eval_budget is not None:
            return self.per_extreme_eval_budget
        return DEFAULT_TOTAL_BUDGET // m

    def axis_tolerance(self, m: int) -> float:
        if self.per_extreme_tolerance is not None:
            return self.per_extreme_tolerance
        return DEFAULT_TOTAL_TOLERANCE / m


@dataclass
class ExtremeResult:
    individual: Individual
    evaluations: int
    converged: bool
    best_history: list[float] = field(default_factory=list)

    def __iter__(self):
        # unpacks as (individual, evaluations)
        yield self.individual
        yield self.evaluations


@dataclass
class NadirReport:
    extreme_points: np.ndarray
    nadir: np.ndarray
    ideal: np.ndarray
    evaluations_used: int
    error: float | None = None
    axis_evaluations: list[int] = field(default_factory=list)
    axis_converged: list[bool] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "extreme_points": self.extreme_points.tolist(),
            "nadir": self.nadir.tolist(),
            "ideal": self.ideal.tolist(),
            "evaluations": int(self.evaluations_used),
            "error": None if self.error is None else float(self.error),
            "axis_evaluations": [int(e) for e in self.axis_evaluations],
            "axis_converged": [bool(c) for c in self.axis_converged],
        }


def scalarize(y, axis: int, lam: float) -> float | np.ndarray:
    """``|y_axis| + lam * sum of squares of the other components``; vectorized over rows."""
    y = np.asarray(y, dtype=float)
    m = y.shape[-1]
    if not 0 <= axis < m:
        raise DimensionError(f"axis {axis} out of range for {m} objectives")
    sq = np.sum(y**2, axis=-1) - y[..., axis] ** 2
    return np.abs(y[..., axis]) + lam * sq


def _axis_error(value: float, nadir: float, ideal: float) -> float:
    return abs(nadir - value) / (nadir - ideal)


def estimate_extreme_point(
    problem: Problem,
    axis: int,
    cfg: DnpeConfig,
    rng: np.random.Generator,
    counter: EvaluationCounter | None = None,
    budget: int | None = None,
) -> ExtremeResult:
    """Run the scalarized GA for one axis.

    The GA is generational with binary tournaments on the scalarized value,
    SBX and polynomial mutation, and elitist truncation of parents plus
    offspring to the population size. It stops when the budget is spent or,
    if the true nadir is known and ``cfg.error_stop`` is set, when the best
    individual's error on this axis drops to the per-axis tolerance.
    """
    budget = cfg.axis_budget(problem.m) if budget is None else budget
    if budget <= 0:
        raise ConfigError(f"extreme-point search on axis {axis} needs a positive budget")
    lam = cfg.lam
    lower, upper = problem.lower, problem.upper
    pm = 1.0 / problem.n if cfg.mutation_prob is None else cfg.mutation_prob
    tol = cfg.axis_tolerance(problem.m)
    target = None
    if cfg.error_stop and problem.known_nadir is not None and problem.known_ideal is not None:
        target = (problem.known_nadir[axis], problem.known_ideal[axis])

    used = 0

    def evaluate(X):
        nonlocal used
        pop = evaluate_population(X, problem, counter)
        used += len(X)
        return pop.X, pop.F

    X, F = evaluate(problem.random_decisions(min(cfg.population, budget), rng))
    fit = scalarize(F, axis, lam)
    order = np.argsort(fit, kind="stable")
    X, F, fit = X[order], F[order], fit[order]
    history = [float(fit[0])]

    def converged() -> bool:
        return target is not None and _axis_error(F[0, axis], *target) <= tol

    while used < budget and not converged():
        n_off = min(cfg.population, budget - used)
        n_pairs = (n_off + 1) // 2
        q = len(X)
        a = rng.integers(0, q, size=(2 * n_pairs, 2))
        winners = np.where(fit[a[:, 0]] <= fit[a[:, 1]], a[:, 0], a[:, 1])
        c1, c2 = sbx_batch(
            X[winners[0::2]], X[winners[1::2]], lower, upper, cfg.crossover_prob, cfg.sbx_eta, rng
        )
        children = np.empty((2 * n_pairs, problem.n))
        children[0::2] = c1
        children[1::2] = c2
        children = polynomial_mutation_batch(children[:n_off], lower, upper, pm, cfg.mutation_eta, rng)
        Xc, Fc = evaluate(children)
        X = np.vstack([X, Xc])
        F = np.vstack([F, Fc])
        fit = np.concatenate([fit, scalarize(Fc, axis, lam)])
        order = np.argsort(fit, kind="stable")[: cfg.population]
        X, F, fit = X[order], F[order], fit[order]
        history.append(float(fit[0]))

    best = Individual(X[0].copy(), F[0].copy())
    return ExtremeResult(best, used, converged(), history)


def nadir_error(estimated, true_nadir, true_ideal) -> float:
    """Normalized distance between an estimated and the true nadir point."""
    z = np.asarray(estimated, dtype=float)
    zn = np.asarray(true_nadir, dtype=float)
    zi = np.asarray(true_ideal, dtype=float)
    if not z.shape == zn.shape == zi.shape:
        raise DimensionError("estimated, nadir and ideal points must share one length")
    width = zn - zi
    if np.any(width == 0):
        raise DegenerateRangeError(f"true nadir equals true ideal on objective {int(np.argmin(np.abs(width)))}")
    return float(np.sqrt(np.sum(((zn - z) / width) ** 2)))


def run_dnpe(
    problem: Problem,
    cfg: DnpeConfig,
    rng: RandomSource,
    counter: EvaluationCounter | None = None,
    total_budget: int | None = None,
) -> NadirReport:
    """Estimate all m extreme points and derive the nadir and ideal points.

    Each axis gets its own child stream from ``rng``. ``total_budget`` caps
    the sum over axes by splitting it evenly.
    """
    m = problem.m
    axis_budget = cfg.axis_budget(m)
    if total_budget is not None:
        axis_budget = min(axis_budget, total_budget // m)
    children = rng.spawn(m) if isinstance(rng, RandomSource) else [rng] * m
    results = [
        estimate_extreme_point(problem, i, cfg, children[i], counter, axis_budget) for i in range(m)
    ]
    extremes = np.array([r.individual.objectives for r in results])
    nadir = np.diag(extremes).copy()
    ideal = extremes.min(axis=0)
    error = None
    if problem.known_nadir is not None and problem.known_ideal is not None:
        error = nadir_error(nadir, problem.known_nadir, problem.known_ideal)
    return NadirReport(
        extreme_points=extremes,
        nadir=nadir,
        ideal=ideal,
        evaluations_used=sum(r.evaluations for r in results),
        error=error,
        axis_evaluations=[r.evaluations for r in results],
        axis_converged=[r.converged for r in results],
    )
