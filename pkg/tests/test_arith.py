import json
from fractions import Fraction

import pytest

from narayana_lab.arith import (
    P_INTEGRALITY_TABLE,
    logconcavity_report,
    monotonicity_report,
    nu2_pattern_report,
    nu3_fact_report,
    nu_p,
    p_integrality_scan,
    p_integrality_search,
    parity_theorems_check,
    prime_support,
)
from narayana_lab.errors import NoneFound, ZeroInput
from narayana_lab.reports import AGREES, DISAGREES, OUT_OF_RANGE
from narayana_lab.sequences import a_table, b_table


def test_nu_p_examples():
    assert nu_p(8, 2) == 3
    assert nu_p(Fraction(1594, 27), 3) == -3
    assert nu_p(495, 2) == 0
    assert nu_p(-12, 2) == 2
    with pytest.raises(ZeroInput):
        nu_p(0, 5)


def test_prime_support():
    assert prime_support(360) == [2, 3, 5]
    assert prime_support(-343) == [7]
    assert prime_support(2 ** 61 - 1) == [2 ** 61 - 1]
    with pytest.raises(ZeroInput):
        prime_support(0)


def test_parity_small_examples():
    a, b = a_table(6), b_table(4)
    assert a[5] == 495 and a[5] % 2 == 1
    assert b[3] == 33


def test_parity_theorems_64():
    rep = parity_theorems_check(64)
    assert rep.ok
    assert rep.count("pass", "half_a_odd_for_n_2^m-1") == 6


def test_nu2_report_examples():
    vr = nu2_pattern_report(64)
    assert vr.valuation(7) == 1 and vr.valuation(3) == 1 and vr.valuation(4) == 3
    checks = {(c.name, c.params["n"]): c.status for c in vr.report.checks}
    assert checks[("nu2_clause_1", 7)] == AGREES
    assert checks[("nu2_clause_1", 3)] == AGREES
    assert checks[("nu2_clause_1", 4)] == DISAGREES
    assert vr.report.ok  # experimental: never fails
    json.dumps(vr.to_dict())


def test_nu2_repeat_convention_changes_verdicts():
    strict = nu2_pattern_report(32, min_repeat=1)
    loose = nu2_pattern_report(32, min_repeat=0)
    assert strict.report.count(DISAGREES) != loose.report.count(DISAGREES)


def test_nu3_report():
    vr = nu3_fact_report(200)
    rep = vr.report
    assert rep.experimental and rep.ok
    assert rep.count(OUT_OF_RANGE) > 0
    assert rep.count(AGREES, "nu3_equal_triple") > 50
    json.dumps(vr.to_dict())


@pytest.mark.parametrize("mu,a1,p", [row for row in P_INTEGRALITY_TABLE if row[0] != 7])
def test_p_integrality_table_rows(mu, a1, p):
    assert p_integrality_search(mu, 12, [a1]).p == p


def test_p_integrality_mu7_gives_13():
    res = p_integrality_search(7, 25, [264])
    assert res.p == 13
    assert all(d % 13 == 0 for d in res.witness_denominators)


def test_p_integrality_mu7_p11_seed():
    assert p_integrality_search(7, 12, [312]).p == 11


def test_p_integrality_spec_examples():
    assert p_integrality_search(2, 12, [2]).p == 3
    assert p_integrality_search(3, 12, [4]).p == 5
    assert p_integrality_search(8, 10, [990]).p == 13


def test_p_integrality_first_candidate_wins():
    res = p_integrality_search(3, 12, [2, 4])
    assert res.a1 == 4 and res.p == 5


def test_p_integrality_none_found():
    with pytest.raises(NoneFound):
        p_integrality_search(3, 12, [2])
    with pytest.raises(ValueError):
        p_integrality_search(3, 12, [])


def test_p_integrality_scan():
    hits = p_integrality_scan(2, 10, 6)
    assert any(r.a1 == 2 and r.p == 3 for r in hits)


def test_logconcavity_examples():
    rep = logconcavity_report([2, 1, 2, 8, 52], as_written=True)
    assert rep.count(AGREES, "as_written") == 3
    for flag in (True, False):
        assert logconcavity_report([1, 1, 1], as_written=flag).count(DISAGREES) == 0
    rep = logconcavity_report([1, 1, 4, 33], as_written=True)
    assert rep.count(AGREES, "as_written") == 2
    with pytest.raises(ValueError):
        logconcavity_report([1, 2])


def test_logconcavity_orientations_disagree_on_a():
    a = a_table(50)
    shown = logconcavity_report(a, True)
    conventional = logconcavity_report(a, False)
    assert shown.count(DISAGREES) == 0
    assert conventional.count(AGREES) == 0


@pytest.mark.parametrize("mu", [1, 2, 3])
def test_monotonicity_holds(mu):
    assert monotonicity_report(mu, 50).ok


@pytest.mark.parametrize("mu", [0, Fraction(1, 2)])
def test_monotonicity_proof_range_holds(mu):
    rep = monotonicity_report(mu, 50)
    for name in ("positive", "increasing_from_bound", "lower_bound", "closed_equals_recurrence"):
        assert rep.count("fail", name) == 0
    # the stated start index admits the step n = 2, where the sequence does not grow
    assert [c.params["n"] for c in rep.failures] == [2]
