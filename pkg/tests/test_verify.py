import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from floorlab.errors import BudgetExceededError, DomainError
from floorlab.evaluator import sided_limits
from floorlab.oracle import farey_in, oracle_discontinuities
from floorlab.partition import count_discontinuities, discontinuities
from floorlab.verify import CLAIM_IDS, SuiteConfig, compare_conjecture7, run_suite

F = Fraction


def test_oracle_examples():
    assert [d.at for d in oracle_discontinuities(2, 4, 5)] == [4, F(17, 4), F(9, 2), F(19, 4)]
    assert [d.at for d in oracle_discontinuities(3, 2, 3)] == [2, F(9, 4), F(5, 2), F(13, 5), F(14, 5)]
    assert [d.at for d in oracle_discontinuities(1, 1, 3)] == [1, 2]


def test_farey_enumeration():
    assert farey_in(F(0), F(1), 4) == [0, F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4)]
    # |F_D| - 1 fractions in [0, 1): 1 + sum of phi(q), q <= D
    assert len(farey_in(F(0), F(1), 10)) == 32


def test_oracle_errors():
    with pytest.raises(DomainError):
        oracle_discontinuities(2, F(1, 2), 2)
    with pytest.raises(DomainError):
        oracle_discontinuities(2, 2, 2)
    with pytest.raises(BudgetExceededError):
        oracle_discontinuities(5, 1, 6, budget=10_000)


@pytest.mark.parametrize("n", range(1, 5))
def test_oracle_equals_partitioner_on_1_5(n):
    oracle = oracle_discontinuities(n, 1, 5)
    assert oracle == discontinuities(n, 1, 5)
    for d in oracle:
        lim = sided_limits(d.at, n)
        assert (lim.left, lim.right) == (d.left, d.right)


ends = st.builds(Fraction, st.integers(8, 40), st.integers(1, 8)).filter(lambda x: 1 <= x <= 5)


@settings(max_examples=40)
@given(ends, ends, st.integers(1, 3))
def test_oracle_equals_partitioner_random(a, b, n):
    if a == b:
        return
    a, b = sorted((a, b))
    assert oracle_discontinuities(n, a, b) == discontinuities(n, a, b)


def test_t6_witnesses():
    for k in range(2, 7):
        counts = [count_discontinuities(n, k, k + 1) for n in range(1, 6)]
        assert all(x < y for x, y in zip(counts, counts[1:]))
        for n in range(2, 6):
            w = k + F(1, k ** (n - 1))
            assert w in {d.at for d in discontinuities(n, k, k + 1)}
            assert w not in {d.at for d in discontinuities(n - 1, k, k + 1)}


def test_suite_examples():
    report = run_suite(claims=["T1", "T5"])
    assert [r.claim_id for r in report.results] == ["T1", "T5"]
    assert report.ok and report.complete
    t1 = report.results[0]
    assert t1.checked == 11 * 10 and t1.counterexamples == []


def test_full_suite_statuses():
    report = run_suite()
    status = {r.claim_id: r.status for r in report.results}
    assert list(status) == list(CLAIM_IDS)
    assert all(status[c] == "pass" for c in CLAIM_IDS if c != "C7")
    assert status["C7"] == "mismatch"
    for r in report.results:
        assert (r.status == "pass") == (r.counterexamples == [])


def test_c7_report_rows():
    report = run_suite(claims=["C7"])
    rows = {row["k"]: row for row in report.results[0].details}
    assert sorted(rows) == list(range(1, 13))
    assert rows[3]["match"] and rows[4]["match"]
    assert not rows[5]["match"]
    # the prediction k + 1 for the jump at 27/5 = 5 + 2/5 fails; the true limits are 140, 145
    bad = [w for w in rows[5]["wrong_limits"] if w["at"] == "27/5"]
    assert bad == [{"at": "27/5", "source": "theorem4", "expected_jump": 6, "actual": [140, 145]}]


def test_c7_small_k_all_match():
    for k in (1, 2, 3, 4):
        assert compare_conjecture7(k)["match"]


def test_duplicate_and_unknown_claims():
    report = run_suite(claims=["T4", "T1", "T4"])
    assert [r.claim_id for r in report.results] == ["T1", "T4"]
    with pytest.raises(ValueError):
        run_suite(claims=["T9"])


def test_budget_marks_incomplete():
    cfg = SuiteConfig(budget=100)
    report = run_suite(cfg, claims=["T5", "C_f2count"])
    assert not report.complete
    assert all(not r.complete for r in report.results)
    assert report.results[0].skipped


def test_serial_and_parallel_identical():
    serial = json.dumps(run_suite().to_dict(), sort_keys=True)
    parallel = json.dumps(run_suite(workers=4).to_dict(), sort_keys=True)
    assert serial == parallel


def test_timing_is_opt_in():
    report = run_suite(claims=["T1"])
    assert "meta" not in report.to_dict()
    assert report.to_dict(timing=True)["meta"]["wall_time_s"] >= 0
