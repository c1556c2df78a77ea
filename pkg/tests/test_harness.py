import json

import pytest

from maoea_igd import ConfigError
from maoea_igd.harness import (
    ALPHA,
    CELL_HEADER,
    SUMMARY_HEADER,
    ExperimentSpec,
    nadir_experiment,
    read_csv,
    run_experiment,
    summarize,
    write_csv,
)
from maoea_igd.metrics import rank_sum_test

ENGINE = {"layers": "4"}


def spec(tmp_path, **kw):
    data = {"problems": [{"id": "dtlz2", "m": 3}], "out": str(tmp_path / "exp"), "runs": 3, "budget": 1200, "engine": ENGINE}
    data.update(kw)
    return ExperimentSpec.from_dict(data)


def test_file_counts(tmp_path):
    run_experiment(spec(tmp_path))
    out = tmp_path / "exp"
    assert len(list((out / "runs").glob("*.json"))) == 3
    header, rows = read_csv(out / "cells" / "dtlz2_m3.csv")
    assert header == CELL_HEADER and len(rows) == 3
    assert (out / "summary.csv").exists()


def test_rerun_is_byte_identical(tmp_path):
    run_experiment(spec(tmp_path))
    first = (tmp_path / "exp" / "summary.csv").read_bytes()
    run_experiment(spec(tmp_path, out=str(tmp_path / "again")))
    assert (tmp_path / "again" / "summary.csv").read_bytes() == first


def test_marks_agree_with_recomputed_statistics(tmp_path):
    run_experiment(spec(tmp_path, runs=4, baseline=True))
    out = tmp_path / "exp"
    _, cell = read_csv(out / "cells" / "dtlz2_m3.csv")
    _, summary = read_csv(out / "summary.csv")
    # the summary is a pure function of the cell CSV
    cell_rows = [{**r, "run": int(r["run"]), "seed": int(r["seed"])} for r in cell]
    write_csv(tmp_path / "rebuilt.csv", SUMMARY_HEADER, summarize({("dtlz2", 3): cell_rows}))
    assert (tmp_path / "rebuilt.csv").read_bytes() == (out / "summary.csv").read_bytes()
    for row in summary:
        if row["algorithm"] != "maoea-igd":
            continue
        ind = row["indicator"]
        a = [float(r[ind]) for r in cell if r["algorithm"] == "maoea-igd"]
        b = [float(r[ind]) for r in cell if r["algorithm"] == "random-search"]
        _, p = rank_sum_test(a, b)
        assert float(row["p_vs_baseline"]) == pytest.approx(p, abs=1e-15)
        if p >= ALPHA:
            assert row["mark"] == "="
        else:
            a_med, b_med = sorted(a)[len(a) // 2], sorted(b)[len(b) // 2]
            better = a_med < b_med if ind == "igd" else a_med > b_med
            assert row["mark"] == ("+" if better else "-")


def test_csv_round_trip(tmp_path):
    run_experiment(spec(tmp_path))
    for path in (tmp_path / "exp").rglob("*.csv"):
        header, rows = read_csv(path)
        copy = tmp_path / "copy.csv"
        write_csv(copy, header, [[r[h] for h in header] for r in rows])
        assert copy.read_bytes() == path.read_bytes()


def test_run_json_round_trip(tmp_path):
    run_experiment(spec(tmp_path, runs=1))
    path = next((tmp_path / "exp" / "runs").glob("*.json"))
    text = path.read_text()
    assert json.dumps(json.loads(text), sort_keys=True, indent=1) + "\n" == text


def test_spec_validation(tmp_path):
    with pytest.raises(ConfigError):
        spec(tmp_path, problems=[{"id": "nope", "m": 3}])
    with pytest.raises(ConfigError):
        spec(tmp_path, engine={"colour": 1})
    with pytest.raises(ConfigError):
        ExperimentSpec.from_dict({"problems": []})
    with pytest.raises(ConfigError):
        spec(tmp_path, budget={"5": 100}).budget_for(3)


def test_unwritable_directory_fails_before_running(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(OSError):
        run_experiment(spec(tmp_path, out=str(blocker / "sub")))


def test_nadir_cap_sets_exhausted_flag(tmp_path):
    rows = nadir_experiment(tmp_path, problems=("dtlz2",), ms=(3,), seeds=2, cap=10)
    assert len(rows) == 2
    for row in rows:
        assert row[3] <= 10 and row[4] > 0.01 and row[5] is True
    _, parsed = read_csv(tmp_path / "nadir.csv")
    assert [r["exhausted"] for r in parsed] == ["True", "True"]
