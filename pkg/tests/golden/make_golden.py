"""Regenerate benchmarks.json from pymoo (run by hand; pymoo is not a dependency).

    python tests/golden/make_golden.py

pymoo rejects WFG position counts below 4, so its validator is bypassed to
evaluate the k = m - 1 configuration used here.
"""

import json
from pathlib import Path

import numpy as np
import pymoo.problems.many.wfg as pymoo_wfg
from pymoo.problems import get_problem

pymoo_wfg.WFG.validate = lambda self, l, k, n_obj: None

DTLZ_K = {1: 5, 2: 10, 3: 10, 4: 10, 5: 10, 6: 10, 7: 20}


def main():
    rng = np.random.default_rng(20240601)
    cases = []
    for m in (3, 8):
        for i in range(1, 8):
            n = DTLZ_K[i] + m - 1
            ref = get_problem(f"dtlz{i}", n_var=n, n_obj=m)
            X = rng.random((6, n))
            cases.append({"id": f"dtlz{i}", "m": m, "x": X.tolist(), "f": ref.evaluate(X).tolist()})
        for i in range(1, 10):
            n = (m - 1) + 20
            ref = get_problem(f"wfg{i}", n_var=n, n_obj=m, k=m - 1)
            X = rng.random((6, n)) * 2.0 * np.arange(1, n + 1)
            cases.append({"id": f"wfg{i}", "m": m, "x": X.tolist(), "f": ref.evaluate(X).tolist()})
    out = Path(__file__).with_name("benchmarks.json")
    out.write_text(json.dumps({"source": "pymoo 0.6.2", "cases": cases}, indent=1) + "\n")


if __name__ == "__main__":
    main()
