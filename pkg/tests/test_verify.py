import json

import pytest

from boundquiver import dsl
from boundquiver.algebra import example_algebra
from boundquiver.verify import CONFIRMED, NOT_CONFIRMED, NOT_FOUND, verify_counterexample

A2 = "vertices 2\narrow a : 1 -> 2\n"


@pytest.fixture(scope="module")
def reports():
    return {p: verify_counterexample(example_algebra(p)) for p in (2, 3, 5, 7)}


def test_confirmed_over_small_fields(reports):
    for p, r in reports.items():
        assert r.verdict == CONFIRMED, (p, r.to_text())
        assert r.exit_code() == 0
        assert [c.status for c in r.checks] == ["pass"] * 9


def test_dimension_vectors_field_independent(reports):
    def dims(r):
        return [(c.name, c.dims, c.summands) for c in r.checks]

    base = dims(reports[3])
    assert all(dims(r) == base for r in reports.values())
    assert reports[3].modules["W"].dims == (3, 3)
    assert reports[3].modules["U"].dims == (2, 1)


def test_report_json(reports):
    d = json.loads(reports[3].to_json())
    assert d["verdict"] == CONFIRMED
    assert d["algebra"]["basis"] == ["e1", "e2", "x", "y", "z", "x*x", "z*y"]
    assert len(d["checks"]) == 9 and d["notes"]


def test_seed_does_not_change_outcome():
    a, b = verify_counterexample(example_algebra(), seed=0), verify_counterexample(example_algebra(), seed=99)
    assert a.to_dict()["checks"] == b.to_dict()["checks"]


def test_custom_end_terms_not_confirmed():
    r = verify_counterexample(example_algebra(), m1_expr="S(1)", m2_expr="S(2)")
    assert r.verdict == NOT_CONFIRMED and r.exit_code() == 1
    bad = verify_counterexample(example_algebra(), m1_expr="P(9)")
    assert bad.verdict == NOT_CONFIRMED and bad.checks[0].status == "fail"


def test_other_algebra_searches_and_reports():
    r = verify_counterexample(dsl.parse_algebra(A2))
    assert r.recipe == "search"
    assert r.verdict == NOT_FOUND and r.exit_code() == 1


def test_semisimple_algebra_has_no_counterexample():
    r = verify_counterexample(dsl.parse_algebra("vertices 1\n"))
    assert r.verdict == NOT_FOUND


def test_reports_are_byte_identical():
    assert verify_counterexample(example_algebra()).to_json() == verify_counterexample(example_algebra()).to_json()
    assert verify_counterexample(example_algebra()).to_text() == verify_counterexample(example_algebra()).to_text()


def test_large_prime_field():
    # eigenvalues come from a factored characteristic polynomial above p = 256
    r = verify_counterexample(example_algebra(257))
    assert r.verdict == CONFIRMED
