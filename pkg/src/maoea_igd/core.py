"""Shared domain types: problems, populations, dominance and the random source.

Objective and decision points are plain 1-D float arrays. A population is
stored column-wise (one matrix per attribute) so that every operator can
work on whole generations with numpy; :class:`Individual` is the row view.

All objectives are minimized. Maximization problems must be negated by the
caller.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterator, Sequence

import numpy as np


class MaoeaError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(MaoeaError, ValueError):
    """Invalid configuration or unsupported problem identifier."""


class DimensionError(MaoeaError, ValueError):
    """Arrays whose lengths should agree do not."""


class DomainError(MaoeaError, ValueError):
    """A decision variable lies outside its box bounds."""


class DegenerateRangeError(MaoeaError, ValueError):
    """A range with zero (or negative) width where a positive one is required."""


class ContractViolation(MaoeaError, RuntimeError):
    """An operation was called on data that breaks its precondition."""


class BudgetExhausted(MaoeaError, RuntimeError):
    """The function-evaluation budget cannot cover the requested work."""


class RankClass(IntEnum):
    """Dominance class of a solution relative to a reference set.

    R1 dominates at least one reference point, R2 is non-dominated to all of
    them, R3 is everything else. Smaller is better.
    """

    R1 = 1
    R2 = 2
    R3 = 3


class RandomSource(np.random.Generator):
    """Seeded generator built on numpy's Philox counter-based bit generator.

    Philox output depends only on the seed and the number of draws, so a
    seed reproduces the same stream on every platform. Without a seed, 64
    bits of OS entropy are drawn and kept in :attr:`seed` so the run can be
    replayed.

    Child streams for parallel or independent sub-tasks come from
    :meth:`spawn`; never share one source between threads.
    """

    def __init__(self, seed: int | np.random.SeedSequence | None = None):
        if isinstance(seed, np.random.SeedSequence):
            seq = seed
        else:
            if seed is None:
                seed = secrets.randbits(64)
            seed = int(seed)
            if not 0 <= seed < 2**64:
                raise ConfigError(f"seed must be a 64-bit unsigned integer, got {seed}")
            seq = np.random.SeedSequence(seed)
        self.seed_sequence = seq
        self.seed = seq.entropy
        super().__init__(np.random.Philox(seq))

    def spawn(self, n_children: int) -> list[RandomSource]:
        return [RandomSource(s) for s in self.seed_sequence.spawn(n_children)]


class EvaluationCounter:
    """Monotone count of objective-function evaluations against an optional cap."""

    def __init__(self, limit: int | None = None):
        self.count = 0
        self.limit = limit

    @property
    def remaining(self) -> int | None:
        if self.limit is None:
            return None
        return max(self.limit - self.count, 0)

    def charge(self, n: int) -> None:
        if n < 0:
            raise ValueError("cannot charge a negative number of evaluations")
        if self.limit is not None and self.count + n > self.limit:
            raise BudgetExhausted(
                f"{n} evaluations requested but only {self.remaining} remain of {self.limit}"
            )
        self.count += n


class Problem:
    """Box-constrained, minimized, vector-valued objective function.

    Subclasses set ``name``, ``m``, ``lower`` and ``upper`` and implement
    :meth:`_evaluate` on a ``(q, n)`` batch. ``known_ideal`` and
    ``known_nadir`` are only filled in for benchmarks with a published front.
    """

    name: str = "problem"

    def __init__(
        self,
        m: int,
        lower: Sequence[float] | np.ndarray,
        upper: Sequence[float] | np.ndarray,
        known_ideal: Sequence[float] | None = None,
        known_nadir: Sequence[float] | None = None,
    ):
        if m < 2:
            raise ConfigError(f"at least two objectives are required, got m={m}")
        self.m = int(m)
        self.lower = np.asarray(lower, dtype=float)
        self.upper = np.asarray(upper, dtype=float)
        if self.lower.ndim != 1 or self.lower.shape != self.upper.shape or len(self.lower) < 1:
            raise DimensionError("lower and upper bounds must be equal-length 1-D arrays")
        if np.any(self.lower > self.upper):
            raise ConfigError("every lower bound must not exceed its upper bound")
        self.known_ideal = None if known_ideal is None else np.asarray(known_ideal, dtype=float)
        self.known_nadir = None if known_nadir is None else np.asarray(known_nadir, dtype=float)
        if self.known_ideal is not None and self.known_nadir is not None:
            if np.any(self.known_ideal >= self.known_nadir):
                raise ConfigError("known ideal must be strictly below known nadir")

    @property
    def n(self) -> int:
        return len(self.lower)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Objective values of one decision vector ``(n,)`` or a batch ``(q, n)``."""
        x = np.asarray(x, dtype=float)
        if x.ndim == 1:
            return self._evaluate(x[None, :])[0]
        return self._evaluate(x)

    def _evaluate(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def random_decisions(self, count: int, rng: np.random.Generator) -> np.ndarray:
        return self.lower + rng.random((count, self.n)) * (self.upper - self.lower)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, m={self.m}, n={self.n})"


@dataclass(frozen=True)
class Individual:
    decision: np.ndarray
    objectives: np.ndarray
    rank: RankClass | None = None
    proximity_row: np.ndarray | None = None

    def __post_init__(self):
        if (self.rank is None) != (self.proximity_row is None):
            raise ContractViolation("rank and proximity_row must be set together")


@dataclass
class Population:
    """Struct-of-arrays population.

    ``X`` is ``(q, n)`` decisions, ``F`` is ``(q, m)`` objectives. ``rank``
    (``(q,)`` ints holding :class:`RankClass` values) and ``proximity``
    (``(q, k)``) are either both present or both absent.
    """

    X: np.ndarray
    F: np.ndarray
    rank: np.ndarray | None = None
    proximity: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.X) != len(self.F):
            raise DimensionError("decision and objective matrices differ in row count")
        if (self.rank is None) != (self.proximity is None):
            raise ContractViolation("rank and proximity must be set together")

    def __len__(self) -> int:
        return len(self.X)

    def __getitem__(self, i: int) -> Individual:
        if self.rank is None:
            return Individual(self.X[i].copy(), self.F[i].copy())
        return Individual(
            self.X[i].copy(), self.F[i].copy(), RankClass(int(self.rank[i])), self.proximity[i].copy()
        )

    def __iter__(self) -> Iterator[Individual]:
        return (self[i] for i in range(len(self)))

    @property
    def is_ranked(self) -> bool:
        return self.rank is not None

    def take(self, idx) -> Population:
        idx = np.asarray(idx, dtype=int)
        if self.rank is None:
            return Population(self.X[idx], self.F[idx])
        return Population(self.X[idx], self.F[idx], self.rank[idx], self.proximity[idx])

    def unranked(self) -> Population:
        return Population(self.X, self.F)

    @classmethod
    def concat(cls, a: Population, b: Population) -> Population:
        X = np.vstack([a.X, b.X])
        F = np.vstack([a.F, b.F])
        if a.is_ranked and b.is_ranked:
            return cls(X, F, np.concatenate([a.rank, b.rank]), np.vstack([a.proximity, b.proximity]))
        return cls(X, F)

    @classmethod
    def from_individuals(cls, individuals: Sequence[Individual]) -> Population:
        individuals = list(individuals)
        if not individuals:
            raise ValueError("cannot infer dimensions from an empty sequence")
        X = np.array([ind.decision for ind in individuals], dtype=float)
        F = np.array([ind.objectives for ind in individuals], dtype=float)
        if all(ind.rank is not None for ind in individuals):
            rank = np.array([int(ind.rank) for ind in individuals])
            prox = np.array([ind.proximity_row for ind in individuals], dtype=float)
            return cls(X, F, rank, prox)
        return cls(X, F)


def dominates(a, b) -> bool:
    """True when ``a`` Pareto-dominates ``b`` under minimization."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionError(f"cannot compare points of shapes {a.shape} and {b.shape}")
    return bool(np.all(a <= b) and np.any(a < b))


def non_dominated_mask(F: np.ndarray) -> np.ndarray:
    """Boolean mask of rows of ``F`` not dominated by any other row."""
    F = np.asarray(F, dtype=float)
    q = len(F)
    mask = np.ones(q, dtype=bool)
    for i in range(q):
        if not mask[i]:
            continue
        le = np.all(F <= F[i], axis=1)
        lt = np.any(F < F[i], axis=1)
        if np.any(le & lt):
            mask[i] = False
            continue
        # rows strictly dominated by F[i] can be dropped right away
        dominated = np.all(F[i] <= F, axis=1) & np.any(F[i] < F, axis=1)
        mask &= ~dominated
    return mask


def check_bounds(X: np.ndarray, problem: Problem) -> None:
    low = X < problem.lower
    high = X > problem.upper
    bad = low | high
    if np.any(bad):
        row, col = np.argwhere(bad)[0]
        raise DomainError(
            f"decision variable {col} = {X[row, col]!r} outside "
            f"[{problem.lower[col]}, {problem.upper[col]}]"
        )


def evaluate_population(
    decisions, problem: Problem, counter: EvaluationCounter | None = None
) -> Population:
    """Evaluate a batch of decision vectors and charge them to ``counter``.

    Raises:
        DomainError: a decision is outside the problem bounds; the message
            names the offending variable index.
        BudgetExhausted: the batch does not fit in the counter's remaining budget.
    """
    X = np.asarray(decisions, dtype=float)
    if X.size == 0:
        X = X.reshape(0, problem.n)
    if X.ndim != 2 or X.shape[1] != problem.n:
        raise DimensionError(f"expected decisions of shape (q, {problem.n}), got {X.shape}")
    check_bounds(X, problem)
    if counter is not None:
        counter.charge(len(X))
    if len(X) == 0:
        return Population(X, np.empty((0, problem.m)))
    F = problem.evaluate(X)
    if not np.all(np.isfinite(F)):
        raise DomainError(f"{problem.name} produced non-finite objective values")
    return Population(X.copy(), F)
