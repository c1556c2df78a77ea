"""Rank classes and proximity distances measured against the reference set.

Every solution is compared only with the k reference points, never with the
rest of the population, so one ranking pass costs q * k comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ContractViolation, DimensionError, Population, RankClass
from .refpoints import ReferencePointSet


@dataclass(frozen=True)
class ProximityMatrix:
    """Signed distances ``entries[i, j]`` from individual i to reference j."""

    entries: np.ndarray
    row_rank: np.ndarray
    comparisons: int = 0

    def __len__(self) -> int:
        return len(self.entries)


def _points(refs) -> np.ndarray:
    P = refs.points if isinstance(refs, ReferencePointSet) else np.asarray(refs, dtype=float)
    if P.ndim != 2 or len(P) == 0:
        raise ValueError("reference set must be a non-empty (k, m) array")
    return P


def rank_matrix(F: np.ndarray, P: np.ndarray) -> np.ndarray:
    """Rank class (as ints 1..3) of every row of ``F`` against reference rows ``P``."""
    F = np.asarray(F, dtype=float)
    if F.shape[1] != P.shape[1]:
        raise DimensionError(f"objective dimension {F.shape[1]} != reference dimension {P.shape[1]}")
    le = F[:, None, :] <= P[None, :, :]
    lt = F[:, None, :] < P[None, :, :]
    ge = F[:, None, :] >= P[None, :, :]
    gt = F[:, None, :] > P[None, :, :]
    dominates_some = np.any(le.all(axis=2) & lt.any(axis=2), axis=1)
    dominated_by_some = np.any(ge.all(axis=2) & gt.any(axis=2), axis=1)
    rank = np.full(len(F), int(RankClass.R2))
    rank[dominated_by_some] = int(RankClass.R3)
    rank[dominates_some] = int(RankClass.R1)
    return rank


def rank_individual(y, refs) -> RankClass:
    """R1 if ``y`` dominates a reference point, R2 if it is incomparable to all, else R3."""
    P = _points(refs)
    y = np.asarray(y, dtype=float)
    if y.shape != (P.shape[1],):
        raise DimensionError(f"point of length {len(y)} vs references of dimension {P.shape[1]}")
    return RankClass(int(rank_matrix(y[None, :], P)[0]))


def distance_matrix(F: np.ndarray, P: np.ndarray, rank: np.ndarray) -> np.ndarray:
    diff = F[:, None, :] - P[None, :, :]
    euclid = np.sqrt(np.sum(diff**2, axis=2))
    plus = np.sqrt(np.sum(np.maximum(diff, 0.0) ** 2, axis=2))
    rank = np.asarray(rank)[:, None]
    return np.where(rank == RankClass.R1, -euclid, np.where(rank == RankClass.R2, plus, euclid))


def proximity_row(y, rank: RankClass, refs) -> np.ndarray:
    """Distances from ``y`` to each reference point under the rule for its rank.

    R1 rows are negated Euclidean distances, R3 rows plain Euclidean, and R2
    rows only count the components where ``y`` is worse than the reference.
    """
    P = _points(refs)
    y = np.asarray(y, dtype=float)
    actual = rank_individual(y, P)
    if RankClass(rank) != actual:
        raise ContractViolation(f"rank {RankClass(rank).name} given but the point ranks {actual.name}")
    return distance_matrix(y[None, :], P, np.array([int(actual)]))[0]


def assign_all(population: Population, refs) -> tuple[Population, ProximityMatrix]:
    """Rank every individual and attach its proximity row."""
    P = _points(refs)
    F = population.F
    if len(F) == 0:
        empty = np.empty((0, len(P)))
        ranked = Population(population.X, F, np.empty(0, dtype=int), empty)
        return ranked, ProximityMatrix(empty, np.empty(0, dtype=int), 0)
    rank = rank_matrix(F, P)
    D = distance_matrix(F, P, rank)
    ranked = Population(population.X, F, rank, D)
    return ranked, ProximityMatrix(D, rank, comparisons=len(F) * len(P))
