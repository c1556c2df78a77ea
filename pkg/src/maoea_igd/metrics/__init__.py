"""Quality indicators and the statistical test used to compare runs."""

from __future__ import annotations

from dataclasses import dataclass

from .distance import igd, igd_plus
from .hypervolume import (
    DEFAULT_SAMPLES,
    MAX_EXACT_OBJECTIVES,
    NORMALIZED_EXACT_OBJECTIVES,
    UseMonteCarlo,
    hv_exact,
    hv_monte_carlo,
    hv_normalized,
    hv_reference_point,
)
from .stats import EXACT_MAX_SIZE, rank_sum_test

INDICATOR_NAMES = ("igd", "igd_plus", "hv", "hv_normalized")


@dataclass(frozen=True)
class IndicatorResult:
    name: str
    value: float
    sample_count: int | None = None

    def __post_init__(self):
        if self.name not in INDICATOR_NAMES:
            raise ValueError(f"unknown indicator {self.name!r}")
        if not self.value >= 0:
            raise ValueError(f"indicator value must be non-negative, got {self.value}")
        if self.name == "hv_normalized" and self.value > 1:
            raise ValueError(f"normalized hypervolume above 1: {self.value}")


__all__ = [
    "DEFAULT_SAMPLES",
    "EXACT_MAX_SIZE",
    "INDICATOR_NAMES",
    "IndicatorResult",
    "MAX_EXACT_OBJECTIVES",
    "NORMALIZED_EXACT_OBJECTIVES",
    "UseMonteCarlo",
    "hv_exact",
    "hv_monte_carlo",
    "hv_normalized",
    "hv_reference_point",
    "igd",
    "igd_plus",
    "rank_sum_test",
]
