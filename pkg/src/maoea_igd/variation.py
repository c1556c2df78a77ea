"""Real-coded variation: SBX, polynomial mutation and the gene-pool pipeline."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ConfigError, ContractViolation, Population


@dataclass(frozen=True)
class VariationConfig:
    """Operator settings.

    ``mutation_prob=None`` means ``1/n``. ``gene_pool_size=None`` means the
    population size, rounded up to the next even number so parents pair up.
    """

    crossover_prob: float = 1.0
    mutation_prob: float | None = None
    sbx_eta: float = 20.0
    mutation_eta: float = 20.0
    gene_pool_size: int | None = None
    children_per_pair: int = 2

    def __post_init__(self):
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ConfigError("crossover_prob must lie in [0, 1]")
        if self.mutation_prob is not None and not 0.0 <= self.mutation_prob <= 1.0:
            raise ConfigError("mutation_prob must lie in [0, 1]")
        if self.sbx_eta <= 0 or self.mutation_eta <= 0:
            raise ConfigError("distribution indices must be positive")
        if self.gene_pool_size is not None and (self.gene_pool_size < 2 or self.gene_pool_size % 2):
            raise ConfigError("gene_pool_size must be a positive even number")
        if self.children_per_pair not in (1, 2):
            raise ConfigError("children_per_pair must be 1 or 2")

    def mutation_rate(self, n: int) -> float:
        return 1.0 / n if self.mutation_prob is None else self.mutation_prob

    def pool_size(self, population_size: int) -> int:
        if self.gene_pool_size is not None:
            return self.gene_pool_size
        return population_size + population_size % 2


def _sbx_beta(u: np.ndarray, eta: float) -> np.ndarray:
    low = u <= 0.5
    beta = np.empty_like(u)
    beta[low] = (2.0 * u[low]) ** (1.0 / (eta + 1.0))
    beta[~low] = (1.0 / (2.0 * (1.0 - u[~low]))) ** (1.0 / (eta + 1.0))
    return beta


def sbx_batch(
    A: np.ndarray,
    B: np.ndarray,
    lower: np.ndarray,
    upper: np.ndarray,
    crossover_prob: float,
    eta: float,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray]:
    """SBX on paired rows of ``A`` and ``B``; each pair crosses with ``crossover_prob``.

    Within a crossing pair every variable is recombined with probability 0.5
    and the two children swap that variable with probability 0.5. Children are
    ``0.5 * ((1 +/- beta) a + (1 -/+ beta) b)`` per variable, so their sum
    equals the parents' sum until the bound clamp acts.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    u = rng.random(A.shape)
    crosses = rng.random(len(A)) < crossover_prob
    per_var = rng.random(A.shape) < 0.5
    swap = rng.random(A.shape) < 0.5
    beta = _sbx_beta(u, eta)
    c1 = 0.5 * ((1.0 + beta) * A + (1.0 - beta) * B)
    c2 = 0.5 * ((1.0 - beta) * A + (1.0 + beta) * B)
    c1, c2 = np.where(swap, c2, c1), np.where(swap, c1, c2)
    active = crosses[:, None] & per_var
    c1 = np.where(active, c1, A)
    c2 = np.where(active, c2, B)
    return np.clip(c1, lower, upper), np.clip(c2, lower, upper)


def sbx(parent_a, parent_b, cfg: VariationConfig, rng: np.random.Generator, lower, upper):
    """Two children of one parent pair."""
    c1, c2 = sbx_batch(
        np.asarray(parent_a, dtype=float)[None, :],
        np.asarray(parent_b, dtype=float)[None, :],
        np.asarray(lower, dtype=float),
        np.asarray(upper, dtype=float),
        cfg.crossover_prob,
        cfg.sbx_eta,
        rng,
    )
    return c1[0], c2[0]


def polynomial_mutation_batch(
    X: np.ndarray,
    lower: np.ndarray,
    upper: np.ndarray,
    prob: float,
    eta: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Bounded polynomial mutation of every row, each variable with probability ``prob``."""
    X = np.array(X, dtype=float, copy=True)
    span = upper - lower
    r = rng.random(X.shape)
    mutate = (rng.random(X.shape) < prob) & (span > 0)
    if not mutate.any():
        return X
    safe_span = np.where(span > 0, span, 1.0)
    d1 = (X - lower) / safe_span
    d2 = (upper - X) / safe_span
    power = 1.0 / (eta + 1.0)
    low = r < 0.5
    with np.errstate(invalid="ignore"):
        val_lo = 2.0 * r + (1.0 - 2.0 * r) * (1.0 - d1) ** (eta + 1.0)
        val_hi = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * (1.0 - d2) ** (eta + 1.0)
        dq = np.where(low, val_lo**power - 1.0, 1.0 - val_hi**power)
    Y = X + dq * span
    Y = np.where(mutate, Y, X)
    return np.clip(Y, lower, upper)


def polynomial_mutation(x, cfg: VariationConfig, rng: np.random.Generator, lower, upper) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    prob = cfg.mutation_rate(len(x))
    return polynomial_mutation_batch(x[None, :], lower, upper, prob, cfg.mutation_eta, rng)[0]


def tournament_winners(population: Population, g: int, rng: np.random.Generator) -> np.ndarray:
    """Indices of ``g`` binary-tournament winners.

    Lower rank class wins; equal classes go to the smaller minimal proximity
    distance; a full tie is settled by a fair coin.
    """
    if not population.is_ranked:
        raise ContractViolation("gene pool filling needs ranked individuals")
    q = len(population)
    if q == 0:
        raise ContractViolation("cannot fill a gene pool from an empty population")
    first = rng.integers(0, q, size=g)
    if q > 1:
        second = (first + rng.integers(1, q, size=g)) % q
    else:
        second = first.copy()
    coin = rng.random(g) < 0.5
    r1, r2 = population.rank[first], population.rank[second]
    best = population.proximity.min(axis=1)
    d1, d2 = best[first], best[second]
    pick_first = np.where(r1 != r2, r1 < r2, np.where(d1 != d2, d1 < d2, coin))
    return np.where(pick_first, first, second)


def fill_gene_pool(population: Population, g: int, rng: np.random.Generator) -> Population:
    return population.take(tournament_winners(population, g, rng))


def generate_offspring(
    population: Population,
    cfg: VariationConfig,
    rng: np.random.Generator,
    lower,
    upper,
) -> np.ndarray:
    """Offspring decision vectors (not yet evaluated).

    The pool is filled by tournament, shuffled, and consumed two parents at a
    time without replacement; each pair yields ``children_per_pair`` children.
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    g = cfg.pool_size(len(population))
    pool = tournament_winners(population, g, rng)
    order = rng.permutation(pool)
    A = population.X[order[0::2]]
    B = population.X[order[1::2]]
    c1, c2 = sbx_batch(A, B, lower, upper, cfg.crossover_prob, cfg.sbx_eta, rng)
    if cfg.children_per_pair == 2:
        children = np.empty((2 * len(c1), c1.shape[1]))
        children[0::2] = c1
        children[1::2] = c2
    else:
        keep_first = rng.random(len(c1)) < 0.5
        children = np.where(keep_first[:, None], c1, c2)
    prob = cfg.mutation_rate(children.shape[1])
    return polynomial_mutation_batch(children, lower, upper, prob, cfg.mutation_eta, rng)
