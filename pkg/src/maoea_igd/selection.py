"""Environmental selection: whole rank fronts first, then an optimal assignment.

The boundary front is resolved by matching a subset of reference points to
distinct individuals so that the summed proximity distance is minimal.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import ConfigError, ContractViolation, Population, RankClass


class InfeasibleAssignment(ConfigError):
    """More rows than columns in a linear assignment instance."""


def solve_lap(cost) -> np.ndarray:
    """Minimum-cost assignment of every row to a distinct column.

    Uses scipy's Jonker-Volgenant solver, which handles ``a x b`` instances
    with ``a <= b`` directly.

    Returns:
        Array of length ``a``; entry ``r`` is the column assigned to row ``r``.
    """
    C = np.asarray(cost, dtype=float)
    if C.ndim != 2:
        raise ValueError("cost must be a 2-D matrix")
    a, b = C.shape
    if a > b:
        raise InfeasibleAssignment(f"{a} rows cannot be matched into {b} columns")
    if a == 0:
        return np.empty(0, dtype=int)
    if not np.all(np.isfinite(C)):
        raise ValueError("cost entries must be finite")
    rows, cols = linear_sum_assignment(C)
    assignment = np.empty(a, dtype=int)
    assignment[rows] = cols
    return assignment


def assignment_cost(cost, assignment) -> float:
    C = np.asarray(cost, dtype=float)
    return float(sum(C[r, c] for r, c in enumerate(assignment)))


def select_reference_subset(k: int, count: int, rng: np.random.Generator | None = None, mode: str = "stride") -> np.ndarray:
    """Pick ``count`` of ``k`` reference indices spread evenly over the canonical order.

    ``mode="stride"`` returns ``floor(t * k / count)`` for ``t = 0..count-1``;
    ``mode="random"`` samples without replacement from ``rng`` instead.
    """
    if not 1 <= count:
        raise ConfigError(f"need at least one reference point, got {count}")
    if count > k:
        raise ConfigError(f"cannot select {count} of {k} reference points")
    if mode == "random":
        if rng is None:
            raise ConfigError("random subset mode needs a random source")
        return np.sort(rng.choice(k, size=count, replace=False))
    if mode != "stride":
        raise ConfigError(f"unknown subset mode {mode!r}")
    # strictly increasing because k >= count, so no duplicates arise
    return (np.arange(count) * k) // count


def environmental_select(
    union: Population,
    refs,
    n_slots: int,
    rng: np.random.Generator | None = None,
    subset_mode: str = "stride",
) -> Population:
    """Keep ``n_slots`` survivors from a ranked population.

    Fronts R1, R2, R3 are copied whole while they fit. If a front overflows,
    the remaining ``A`` slots go to the front members that an optimal
    assignment matches to ``A`` evenly spaced reference points, using the
    raw signed proximity distances as costs.
    """
    if not union.is_ranked:
        raise ContractViolation("environmental selection needs ranked individuals")
    if n_slots > len(union):
        raise ConfigError(f"cannot keep {n_slots} of {len(union)} individuals")
    k = union.proximity.shape[1]
    chosen: list[np.ndarray] = []
    filled = 0
    for cls in RankClass:
        front = np.flatnonzero(union.rank == int(cls))
        if filled + len(front) <= n_slots:
            chosen.append(front)
            filled += len(front)
            if filled == n_slots:
                break
            continue
        A = n_slots - filled
        rows = select_reference_subset(k, A, rng, subset_mode)
        cost = union.proximity[front][:, rows].T
        cols = solve_lap(cost)
        chosen.append(front[cols])
        break
    return union.take(np.concatenate(chosen) if chosen else np.empty(0, dtype=int))
