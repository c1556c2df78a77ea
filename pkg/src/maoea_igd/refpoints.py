"""Structured reference points on the unit simplex and their Utopian-front image."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .core import ConfigError, DegenerateRangeError, DimensionError

UNIT_SIMPLEX = "unit_simplex"
UTOPIAN = "utopian"

# (outer, inner) divisions giving the population sizes used for 8, 15 and 20 objectives
TWO_LAYER_TABLE = {8: (3, 3), 15: (2, 2), 20: (2, 1)}


@dataclass(frozen=True)
class ReferencePointSet:
    points: np.ndarray
    source: str = UNIT_SIMPLEX

    def __len__(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class LayerConfig:
    outer_divisions: int
    inner_divisions: int = 0
    shrink: float = 0.5

    def __post_init__(self):
        if self.outer_divisions < 1:
            raise ConfigError("outer_divisions must be a positive integer")
        if self.inner_divisions < 0:
            raise ConfigError("inner_divisions must be non-negative")
        if not 0.0 < self.shrink < 1.0:
            raise ConfigError("shrink must lie strictly between 0 and 1")

    def count(self, m: int) -> int:
        n = comb(self.outer_divisions + m - 1, m - 1)
        if self.inner_divisions > 0:
            n += comb(self.inner_divisions + m - 1, m - 1)
        return n

    @classmethod
    def parse(cls, text: str) -> LayerConfig:
        """Parse ``"a"`` or ``"a,b"`` as outer (and inner) division counts."""
        parts = [p.strip() for p in str(text).split(",") if p.strip()]
        if not 1 <= len(parts) <= 2:
            raise ConfigError(f"divisions must look like 'a' or 'a,b', got {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError as exc:
            raise ConfigError(f"divisions must be integers, got {text!r}") from exc
        return cls(*values)


def default_layers(m: int) -> LayerConfig:
    """Division settings used when the caller does not choose one."""
    if m in TWO_LAYER_TABLE:
        return LayerConfig(*TWO_LAYER_TABLE[m])
    single = {2: 99, 3: 12, 4: 8, 5: 6, 6: 5, 7: 4}
    if m in single:
        return LayerConfig(single[m])
    if m < 15:
        return LayerConfig(3, 2)
    return LayerConfig(2, 1)


def _compositions(total: int, bins: int):
    # largest first coordinate first, so (H, 0, ..., 0) leads
    if bins == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, bins - 1):
            yield (head,) + tail


def das_dennis(m: int, divisions: int) -> ReferencePointSet:
    """All points of the simplex lattice with ``divisions`` steps per axis.

    Rows come in descending lexicographic order of the integer compositions,
    so the result is identical on every call.
    """
    if m < 2:
        raise ConfigError(f"at least two objectives are required, got m={m}")
    if divisions < 1:
        raise ConfigError(f"divisions must be positive, got {divisions}")
    pts = np.array(list(_compositions(divisions, m)), dtype=float) / divisions
    return ReferencePointSet(pts, UNIT_SIMPLEX)


def two_layer(m: int, cfg: LayerConfig) -> ReferencePointSet:
    """Outer lattice plus an inner lattice shrunk toward the simplex centroid."""
    outer = das_dennis(m, cfg.outer_divisions).points
    if cfg.inner_divisions == 0:
        return ReferencePointSet(outer, UNIT_SIMPLEX)
    inner = das_dennis(m, cfg.inner_divisions).points
    inner = (1.0 - cfg.shrink) / m + cfg.shrink * inner
    pts = np.vstack([outer, inner])
    gap = np.max(np.abs(pts[:, None, :] - pts[None, :, :]), axis=2)
    dup = np.tril(gap <= 1e-12, k=-1).any(axis=1)
    return ReferencePointSet(pts[~dup], UNIT_SIMPLEX)


def _check_range(ideal: np.ndarray, nadir: np.ndarray, m: int) -> None:
    if ideal.shape != (m,) or nadir.shape != (m,):
        raise DimensionError(f"ideal and nadir must have length {m}")
    for j in range(m):
        if not ideal[j] < nadir[j]:
            raise DegenerateRangeError(
                f"objective {j}: ideal {ideal[j]!r} is not below nadir {nadir[j]!r}"
            )


def to_utopian(points: ReferencePointSet, ideal, nadir) -> ReferencePointSet:
    """Affinely map unit-simplex points onto the hyperplane spanned by ideal and nadir."""
    if points.source != UNIT_SIMPLEX:
        raise ConfigError("to_utopian expects unit-simplex points")
    ideal = np.asarray(ideal, dtype=float)
    nadir = np.asarray(nadir, dtype=float)
    _check_range(ideal, nadir, points.m)
    return ReferencePointSet(points.points * (nadir - ideal) + ideal, UTOPIAN)


def from_utopian(points: ReferencePointSet, ideal, nadir) -> ReferencePointSet:
    """Inverse of :func:`to_utopian`."""
    ideal = np.asarray(ideal, dtype=float)
    nadir = np.asarray(nadir, dtype=float)
    _check_range(ideal, nadir, points.m)
    return ReferencePointSet((points.points - ideal) / (nadir - ideal), UNIT_SIMPLEX)
