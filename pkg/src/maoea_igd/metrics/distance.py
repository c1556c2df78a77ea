"""Inverted generational distance and its dominance-aware variant."""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist

from ..core import DimensionError

# reference rows processed per block, keeps the (rows, front, m) buffer small
_BLOCK = 2048


def _as_set(points, name: str) -> np.ndarray:
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or len(arr) == 0:
        raise ValueError(f"{name} must be a non-empty set of points")
    return arr


def igd(reference, front, plus: bool = False) -> float:
    """Mean over reference points of the distance to the closest front member.

    With ``plus=True`` only the components where the front member is worse
    than the reference point count, so a member that weakly dominates a
    reference point is at distance zero from it.
    """
    R = _as_set(reference, "reference")
    Y = _as_set(front, "front")
    if R.shape[1] != Y.shape[1]:
        raise DimensionError(f"reference dimension {R.shape[1]} != front dimension {Y.shape[1]}")
    if not plus:
        return float(cdist(R, Y).min(axis=1).mean())
    total = 0.0
    for start in range(0, len(R), _BLOCK):
        diff = Y[None, :, :] - R[start : start + _BLOCK, None, :]
        if plus:
            diff = np.maximum(diff, 0.0)
        total += float(np.sqrt(np.sum(diff**2, axis=2)).min(axis=1).sum())
    return total / len(R)


def igd_plus(reference, front) -> float:
    return igd(reference, front, plus=True)
