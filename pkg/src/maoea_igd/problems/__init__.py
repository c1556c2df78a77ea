"""Benchmark registry: DTLZ1-7 and WFG1-9 addressed as ``"dtlz1"`` .. ``"wfg9"``."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from ..core import ConfigError, Problem
from .dtlz import DTLZ_CLASSES, DTLZ
from .wfg import WFG_CLASSES, WFG

__all__ = [
    "BenchmarkSpec",
    "DTLZ",
    "WFG",
    "PROBLEM_IDS",
    "make_problem",
    "parse_problem_id",
    "sample_true_front",
    "true_nadir",
]

PROBLEM_IDS = tuple([f"dtlz{i}" for i in DTLZ_CLASSES] + [f"wfg{i}" for i in WFG_CLASSES])

_ID_RE = re.compile(r"^(dtlz|wfg)([1-9])$")


@dataclass(frozen=True)
class BenchmarkSpec:
    family: str
    index: int
    m: int

    @property
    def problem_id(self) -> str:
        return f"{self.family.lower()}{self.index}"

    @classmethod
    def from_id(cls, problem_id: str, m: int) -> BenchmarkSpec:
        family, index = parse_problem_id(problem_id)
        return cls(family, index, m)


def parse_problem_id(problem_id: str) -> tuple[str, int]:
    match = _ID_RE.match(str(problem_id))
    if not match:
        raise ConfigError(f"unknown problem id {problem_id!r}; expected one of {', '.join(PROBLEM_IDS)}")
    family, index = match.group(1).upper(), int(match.group(2))
    table = DTLZ_CLASSES if family == "DTLZ" else WFG_CLASSES
    if index not in table:
        raise ConfigError(f"unknown problem id {problem_id!r}")
    return family, index


def make_problem(spec: BenchmarkSpec | str, m: int | None = None) -> Problem:
    """Build a benchmark instance.

    Accepts either a :class:`BenchmarkSpec` or a registry id plus ``m``.
    Variable counts follow ``n = k + m - 1`` for DTLZ (k = 5, 10 or 20) and
    ``n = (m - 1) + 20`` for WFG.
    """
    if isinstance(spec, str):
        if m is None:
            raise ConfigError("an objective count is required with a problem id")
        spec = BenchmarkSpec.from_id(spec, m)
    family = spec.family.upper()
    if spec.m < 2:
        raise ConfigError(f"at least two objectives are required, got m={spec.m}")
    if family == "DTLZ" and spec.index in DTLZ_CLASSES:
        return DTLZ_CLASSES[spec.index](spec.m)
    if family == "WFG" and spec.index in WFG_CLASSES:
        return WFG_CLASSES[spec.index](spec.m)
    raise ConfigError(f"unsupported benchmark {spec.family}{spec.index}")


def true_nadir(spec: BenchmarkSpec | str, m: int | None = None) -> np.ndarray:
    """Published nadir point; only DTLZ1, DTLZ2 and WFG2 have one here."""
    if isinstance(spec, str):
        spec = BenchmarkSpec.from_id(spec, m)
    key = spec.problem_id
    if key == "dtlz1":
        return np.full(spec.m, 0.5)
    if key == "dtlz2":
        return np.ones(spec.m)
    if key == "wfg2":
        return 2.0 * np.arange(1, spec.m + 1)
    raise ConfigError(f"no published nadir point for {key}")


def sample_true_front(spec: BenchmarkSpec | str, count: int, rng: np.random.Generator, m: int | None = None) -> np.ndarray:
    """Uniform samples of the analytic Pareto front of DTLZ1 or DTLZ2.

    DTLZ1 points are uniform on the simplex ``sum(y) = 0.5``; DTLZ2 points are
    uniform on the non-negative part of the unit sphere.
    """
    if isinstance(spec, str):
        spec = BenchmarkSpec.from_id(spec, m)
    key = spec.problem_id
    if key not in ("dtlz1", "dtlz2"):
        raise ConfigError(f"no analytic front sampler for {key}")
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return np.empty((0, spec.m))
    if key == "dtlz1":
        Y = rng.exponential(size=(count, spec.m))
        return 0.5 * Y / Y.sum(axis=1, keepdims=True)
    Y = np.abs(rng.standard_normal(size=(count, spec.m)))
    return Y / np.linalg.norm(Y, axis=1, keepdims=True)
