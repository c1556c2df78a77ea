import numpy as np
import pytest

from maoea_igd import (
    ConfigError,
    DegenerateRangeError,
    DnpeConfig,
    EvaluationCounter,
    RandomSource,
    estimate_extreme_point,
    make_problem,
    nadir_error,
    run_dnpe,
    scalarize,
)

SEEDS = range(5)


def test_scalarize_examples():
    assert scalarize([1, 0.1], 0, 100) == pytest.approx(2.0)
    assert scalarize([0, 0, 0], 2, 7) == 0
    assert scalarize([2, 3], 1, 10) == pytest.approx(43.0)


def test_scalarize_is_vectorized():
    Y = np.array([[1, 0.1], [2, 3]])
    np.testing.assert_allclose(scalarize(Y, 0, 100), [2.0, 2 + 900.0])


def test_lambda_must_exceed_one():
    with pytest.raises(ConfigError):
        DnpeConfig(lam=1.0)


def test_extreme_point_of_dtlz2():
    problem = make_problem("dtlz2", 3)
    best, used = estimate_extreme_point(problem, 0, DnpeConfig(), RandomSource(0))
    assert abs(best.objectives[0] - 1.0) <= 0.01
    assert np.all(np.abs(best.objectives[1:]) <= 0.1)
    assert 0 < used <= DnpeConfig().axis_budget(3)


def test_zero_budget_is_an_error():
    problem = make_problem("dtlz2", 3)
    with pytest.raises(ConfigError):
        estimate_extreme_point(problem, 0, DnpeConfig(per_extreme_eval_budget=0), RandomSource(0))


def test_extreme_point_search_is_deterministic():
    problem = make_problem("wfg2", 3)
    cfg = DnpeConfig(per_extreme_eval_budget=2000)
    a = estimate_extreme_point(problem, 1, cfg, RandomSource(4))
    b = estimate_extreme_point(problem, 1, cfg, RandomSource(4))
    assert np.array_equal(a.individual.objectives, b.individual.objectives)
    assert a.evaluations == b.evaluations


def test_best_scalarized_value_never_worsens():
    problem = make_problem("dtlz1", 3)
    result = estimate_extreme_point(problem, 2, DnpeConfig(per_extreme_eval_budget=5000), RandomSource(1))
    assert np.all(np.diff(result.best_history) <= 0)


def test_counter_sees_every_evaluation():
    problem = make_problem("dtlz2", 4)
    counter = EvaluationCounter()
    report = run_dnpe(problem, DnpeConfig(per_extreme_eval_budget=1000, error_stop=False), RandomSource(2), counter)
    assert counter.count == report.evaluations_used == 4000
    assert report.axis_evaluations == [1000] * 4


def test_total_budget_is_split_evenly():
    problem = make_problem("dtlz2", 3)
    report = run_dnpe(problem, DnpeConfig(error_stop=False), RandomSource(2), total_budget=900)
    assert report.axis_evaluations == [300, 300, 300]


def test_nadir_error_examples():
    assert nadir_error([1, 1], [1, 1], [0, 0]) == 0
    assert nadir_error([1.1, 0.9], [1, 1], [0, 0]) == pytest.approx(np.sqrt(0.02), abs=1e-12)
    assert nadir_error([2, 3.96], [2, 4], [0, 0]) == pytest.approx(0.01, abs=1e-12)
    with pytest.raises(DegenerateRangeError):
        nadir_error([1, 1], [1, 1], [1, 0])


def test_report_is_consistent():
    problem = make_problem("dtlz2", 3)
    report = run_dnpe(problem, DnpeConfig(), RandomSource(0))
    np.testing.assert_array_equal(report.nadir, np.diag(report.extreme_points))
    np.testing.assert_array_equal(report.ideal, report.extreme_points.min(axis=0))
    assert np.all(report.ideal <= report.nadir)
    assert np.all(report.ideal <= 0.01)
    assert report.error == pytest.approx(nadir_error(report.nadir, [1, 1, 1], [0, 0, 0]))


def _median_error(pid: str, m: int) -> float:
    problem = make_problem(pid, m)
    return float(np.median([run_dnpe(problem, DnpeConfig(), RandomSource(s)).error for s in SEEDS]))


def test_dtlz1_three_objectives_reaches_tolerance():
    assert _median_error("dtlz1", 3) <= 0.01


def test_wfg2_three_objectives_reaches_tolerance():
    problem = make_problem("wfg2", 3)
    report = run_dnpe(problem, DnpeConfig(), RandomSource(0))
    np.testing.assert_allclose(report.nadir, [2, 4, 6], rtol=0.02)
    assert _median_error("wfg2", 3) <= 0.01
