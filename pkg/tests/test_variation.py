import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maoea_igd import (
    ConfigError,
    ContractViolation,
    Population,
    RandomSource,
    VariationConfig,
    fill_gene_pool,
    generate_offspring,
    polynomial_mutation,
    sbx,
)
from maoea_igd.core import RankClass
from maoea_igd.variation import tournament_winners

LOWER = np.zeros(6)
UPPER = np.ones(6)


def ranked(ranks, mins, n=3):
    ranks = np.asarray(ranks)
    prox = np.column_stack([np.asarray(mins, dtype=float), np.full(len(ranks), 9.0)])
    X = np.arange(len(ranks) * n, dtype=float).reshape(len(ranks), n) / (len(ranks) * n)
    return Population(X, np.zeros((len(ranks), 2)), ranks, prox)


def test_identical_parents_give_identical_children(rng):
    x = rng.random(6)
    c1, c2 = sbx(x, x, VariationConfig(), rng, LOWER, UPPER)
    np.testing.assert_allclose(c1, x, atol=1e-15)
    np.testing.assert_allclose(c2, x, atol=1e-15)


def test_no_crossover_copies_parents(rng):
    a, b = rng.random(6), rng.random(6)
    c1, c2 = sbx(a, b, VariationConfig(crossover_prob=0.0), rng, LOWER, UPPER)
    assert np.array_equal(c1, a) and np.array_equal(c2, b)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0.5, 60))
def test_sbx_preserves_pair_sum_when_unclamped(seed, eta):
    rng = np.random.default_rng(seed)
    a, b = rng.random(6), rng.random(6)
    lower, upper = np.full(6, -1e9), np.full(6, 1e9)
    c1, c2 = sbx(a, b, VariationConfig(sbx_eta=eta), rng, lower, upper)
    np.testing.assert_allclose(c1 + c2, a + b, atol=1e-9)


def test_large_index_keeps_children_near_parents(rng):
    cfg = VariationConfig(crossover_prob=1.0, mutation_prob=0.0, sbx_eta=1e6)
    for _ in range(200):
        a, b = rng.random(6), rng.random(6)
        c1, c2 = sbx(a, b, cfg, rng, LOWER, UPPER)
        near = np.minimum(np.abs(c1 - a), np.abs(c1 - b))
        assert np.all(near <= 1e-3)
        assert np.all(np.minimum(np.abs(c2 - a), np.abs(c2 - b)) <= 1e-3)


def test_zero_mutation_leaves_point_unchanged(rng):
    x = rng.random(6)
    assert np.array_equal(polynomial_mutation(x, VariationConfig(mutation_prob=0.0), rng, LOWER, UPPER), x)


def test_mutation_respects_bounds_from_the_edges(rng):
    cfg = VariationConfig(mutation_prob=1.0, mutation_eta=1.0)
    for x in (LOWER, UPPER):
        for _ in range(200):
            y = polynomial_mutation(x, cfg, rng, LOWER, UPPER)
            assert np.all(y >= LOWER) and np.all(y <= UPPER)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_operators_stay_in_bounds(seed):
    rng = np.random.default_rng(seed)
    lower = rng.uniform(-5, 0, 4)
    upper = lower + rng.uniform(0, 3, 4)
    a = rng.uniform(lower, upper)
    b = rng.uniform(lower, upper)
    cfg = VariationConfig(mutation_prob=1.0, sbx_eta=rng.uniform(0.1, 30), mutation_eta=rng.uniform(0.1, 30))
    for child in sbx(a, b, cfg, rng, lower, upper):
        y = polynomial_mutation(child, cfg, rng, lower, upper)
        assert np.all(y >= lower) and np.all(y <= upper)


def test_lower_rank_wins_the_tournament(rng):
    pop = ranked([RankClass.R1, RankClass.R2], [5.0, 0.1])
    assert set(tournament_winners(pop, 100, rng).tolist()) == {0}


def test_smaller_distance_breaks_rank_ties(rng):
    pop = ranked([RankClass.R2, RankClass.R2], [0.5, 2.0])
    assert set(tournament_winners(pop, 100, rng).tolist()) == {0}


def test_full_tie_is_a_fair_coin():
    pop = ranked([RankClass.R3, RankClass.R3], [1.0, 1.0])
    wins = tournament_winners(pop, 10_000, RandomSource(11))
    assert abs(np.mean(wins == 0) - 0.5) <= 0.02


def test_unranked_population_is_rejected(rng):
    pop = Population(np.zeros((2, 3)), np.zeros((2, 2)))
    with pytest.raises(ContractViolation):
        fill_gene_pool(pop, 2, rng)


def test_gene_pool_has_requested_size(rng):
    pop = ranked([1, 2, 3, 2, 1], [0, 1, 2, 3, 4])
    assert len(fill_gene_pool(pop, 7, rng)) == 7


@pytest.mark.parametrize("children,expected", [(2, 4), (1, 2)])
def test_offspring_count(children, expected, rng):
    pop = ranked([1, 2, 3, 2], [0, 1, 2, 3], n=6)
    cfg = VariationConfig(gene_pool_size=4, children_per_pair=children)
    kids = generate_offspring(pop, cfg, rng, LOWER, UPPER)
    assert kids.shape == (expected, 6)
    assert np.all(kids >= LOWER) and np.all(kids <= UPPER)


def test_default_pool_rounds_odd_population_up():
    assert VariationConfig().pool_size(91) == 92
    assert VariationConfig().pool_size(240) == 240


@pytest.mark.parametrize("kwargs", [{"crossover_prob": 1.5}, {"gene_pool_size": 3}, {"children_per_pair": 3}, {"sbx_eta": 0}])
def test_invalid_settings(kwargs):
    with pytest.raises(ConfigError):
        VariationConfig(**kwargs)
