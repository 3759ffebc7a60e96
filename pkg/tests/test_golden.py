"""Golden-file comparisons for the bundled corpus.

Regenerate (after verifying a change by hand) with ``python3 tests/test_golden.py``.
"""

import json
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
sys.path.insert(0, str(HERE))

from icejac import graded as gr  # noqa: E402
from icejac.jacobian import find_positive_grading  # noqa: E402
from icejac.parser import load  # noqa: E402
from icejac.pipeline import CORPUS, check_file  # noqa: E402

CORPUS_RUNS = {
    "triangle-ice": {},
    "triangle-plain": {},
    "a-prime": {},
    "gr26": {"degree_cap": 10},
}


def corpus_report(name):
    rep, _ = check_file(name, **CORPUS_RUNS[name])
    rep.pop("timings")
    return rep


def gr26_tables():
    q, W, _ = load(CORPUS / "gr26.qp")
    g = find_positive_grading(q, W)
    cap = 2 * g.potential_degree
    return {
        "grading": g.as_dict(q),
        "potential_degree": g.potential_degree,
        "degree_cap": cap,
        "shift_convention": gr.SHIFT_CONVENTION,
        "simples": [c.as_dict(q) for c in gr.graded_check_all(q, W, g, cap)],
    }


def _golden(name):
    return json.loads((GOLDEN / name).read_text())


@pytest.mark.parametrize("name", sorted(CORPUS_RUNS))
def test_corpus_report_matches_golden(name):
    assert corpus_report(name) == _golden(f"{name}.report.json")


def test_gr26_tables_match_golden():
    assert gr26_tables() == _golden("gr26.tables.json")


def regenerate():
    GOLDEN.mkdir(exist_ok=True)
    for name in CORPUS_RUNS:
        (GOLDEN / f"{name}.report.json").write_text(json.dumps(corpus_report(name), indent=1) + "\n")
    (GOLDEN / "gr26.tables.json").write_text(json.dumps(gr26_tables(), indent=1) + "\n")


if __name__ == "__main__":
    regenerate()
