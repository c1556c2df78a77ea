"""Many-objective optimization driven by the IGD indicator.

The optimizer estimates the nadir point by decomposition, samples reference
points on the hyperplane between the ideal and nadir points, ranks solutions
against those references and selects survivors by optimal assignment.
"""

from .core import (
    BudgetExhausted,
    ConfigError,
    ContractViolation,
    DegenerateRangeError,
    DimensionError,
    DomainError,
    EvaluationCounter,
    Individual,
    MaoeaError,
    Population,
    Problem,
    RandomSource,
    RankClass,
    dominates,
    evaluate_population,
    non_dominated_mask,
)
from .engine import EngineConfig, RunRecord, run, run_random_baseline
from .metrics import hv_exact, hv_monte_carlo, hv_normalized, igd, igd_plus, rank_sum_test
from .nadir import DnpeConfig, NadirReport, estimate_extreme_point, nadir_error, run_dnpe, scalarize
from .problems import BenchmarkSpec, make_problem, sample_true_front, true_nadir
from .ranking import assign_all, proximity_row, rank_individual
from .refpoints import LayerConfig, ReferencePointSet, das_dennis, from_utopian, to_utopian, two_layer
from .selection import InfeasibleAssignment, environmental_select, select_reference_subset, solve_lap
from .variation import VariationConfig, fill_gene_pool, generate_offspring, polynomial_mutation, sbx

__version__ = "0.1.0"

__all__ = [
    "BenchmarkSpec",
    "BudgetExhausted",
    "ConfigError",
    "ContractViolation",
    "DegenerateRangeError",
    "DimensionError",
    "DnpeConfig",
    "DomainError",
    "EngineConfig",
    "EvaluationCounter",
    "InfeasibleAssignment",
    "Individual",
    "LayerConfig",
    "MaoeaError",
    "NadirReport",
    "Population",
    "Problem",
    "RandomSource",
    "RankClass",
    "ReferencePointSet",
    "RunRecord",
    "VariationConfig",
    "assign_all",
    "das_dennis",
    "dominates",
    "environmental_select",
    "estimate_extreme_point",
    "evaluate_population",
    "fill_gene_pool",
    "from_utopian",
    "generate_offspring",
    "hv_exact",
    "hv_monte_carlo",
    "hv_normalized",
    "igd",
    "igd_plus",
    "make_problem",
    "nadir_error",
    "non_dominated_mask",
    "polynomial_mutation",
    "proximity_row",
    "rank_individual",
    "rank_sum_test",
    "run",
    "run_dnpe",
    "run_random_baseline",
    "sample_true_front",
    "sbx",
    "scalarize",
    "select_reference_subset",
    "solve_lap",
    "to_utopian",
    "true_nadir",
    "two_layer",
]
