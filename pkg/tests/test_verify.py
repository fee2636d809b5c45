import pytest

from grasscoh.bott import Interval
from grasscoh.les import Window
from grasscoh.verify import (
    B_DEGREES,
    EXPECTED_CLASSES,
    LEVELS,
    ClaimResult,
    Status,
    VerificationReport,
    Witness,
    _check,
    _guarded,
    _Scan,
    classify,
    compare,
    no_intermediate,
    run_suite,
    table_families,
    vanishes,
)
from grasscoh.les import default_engine

ACM = ["O", "Q", "S", "Sd", "Qd", "K", "K~", "E", "E~", "M", "M~", "O(3)", "Q * O(-2)"]


def test_b_ranges_nested():
    ranges = [set(B_DEGREES[lv]) for lv in LEVELS]
    for stronger, weaker in zip(ranges, ranges[1:]):
        assert weaker <= stronger


@pytest.mark.parametrize("text,level,witness", EXPECTED_CLASSES)
def test_classify_named(text, level, witness):
    c = classify(text)
    assert c.level == level
    fails = c.failures()
    assert (fails[-1].witness if fails else None) == witness


@pytest.mark.parametrize("text", ACM + ["Q * Sd", "K * Q"])
def test_classify_monotone(text):
    c = classify(text)
    statuses = [o.status for o in c.outcomes]
    if "satisfied" in statuses:
        first = statuses.index("satisfied")
        assert all(s == "satisfied" for s in statuses[first:])


def test_non_acm_bundle_fails_everything():
    c = classify("Q * Sd")
    assert c.level is None
    assert all(o.witness.condition == "a" for o in c.outcomes)
    assert c.outcomes[0].witness == Witness("a", "O", -1, 1, 1)


def test_q_fails_only_c():
    c = classify("Q")
    assert c.outcomes[0].witness.condition == "c"


@pytest.mark.parametrize("text", ACM)
def test_primed_conditions_equivalent(text):
    """(b) and (c) together hold iff H^3..5 of F (x) S and H^1..3 of F (x) Sd vanish."""
    assert vanishes(text, "O", range(1, 6))
    b_and_c = vanishes(text, "Q", range(1, 6)) and vanishes(text, "Sd", (1,))
    primed = vanishes(text, "S", (3, 4, 5)) and vanishes(text, "Sd", (1, 2, 3))
    assert b_and_c == primed


def test_primed_conditions_only_equivalent_as_a_pair():
    # Sd violates (b) at h^1(Sd (x) Q(-1)) but satisfies the primed version of (b)
    assert vanishes("Sd", "Q", range(1, 6)) is False
    assert vanishes("Sd", "S", (3, 4, 5)) is True


def test_check_reports_interval_as_indeterminate():
    scan = _Scan(Window(-3, 3), [(0, 2, Interval(0, 1))])
    status, witness = _check(scan, "b", "Q", (1, 2))
    assert status == "indeterminate"
    assert witness.value == Interval(0, 1)
    status, _ = _check(scan, "b", "Q", (3,))
    assert status == "satisfied"


def test_check_uncertified_window():
    scan = _Scan(Window(-3, 3, above=False), [])
    assert _check(scan, "b", "Q", (1,))[0] == "indeterminate"
    assert _check(scan, "b", "Q", ())[0] == "satisfied"


def test_compare():
    assert compare(5, 5) is Status.EXACT
    assert compare(4, 5) is Status.MISMATCH
    assert compare(Interval(3, 6), 5) is Status.CONSISTENT
    assert compare(Interval(0, 4), 5) is Status.MISMATCH


def test_report_status():
    r = VerificationReport("x")
    assert r.status is Status.EXACT
    r.claims.append(ClaimResult("a", 1, 1, Status.CONSISTENT, "here"))
    assert r.status is Status.CONSISTENT
    r.claims.append(ClaimResult("b", 1, 2, Status.MISMATCH, "there"))
    assert r.status is Status.MISMATCH
    assert r.first_mismatch().claim == "b"


def test_exceptions_become_mismatches():
    r = VerificationReport("x")
    _guarded(r, "boom", "nowhere", 1, lambda: 1 / 0)
    assert r.claims[0].status is Status.MISMATCH
    assert "ZeroDivisionError" in r.claims[0].detail


def test_table_families_deduplicated():
    names = [t for t, _ in table_families(default_engine())]
    assert "Sd * Q" not in names and "Q * Sd" in names
    assert len(names) == 11


def test_no_intermediate_claim():
    computed, status = no_intermediate(default_engine(), "K")
    assert status is Status.EXACT and computed["certified"]
    _, status = no_intermediate(default_engine(), "K * Q")
    assert status is Status.MISMATCH


@pytest.mark.parametrize("suite", ["table13", "structure", "classify"])
def test_suites_exact(suite):
    report = run_suite(suite)
    bad = [c for c in report.claims if c.status is not Status.EXACT]
    assert not bad, bad


def test_table13_entries_first():
    claims = run_suite("table13").claims
    assert claims[0].claim == "h^1(Q * Sd(-1)) = 1"
    assert sum(c.claim.startswith("h^") for c in claims) == 13
