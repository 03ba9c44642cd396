"""Parity, 2-adic and 3-adic valuations, p-integrality, log-concavity.

The parity statements are proved, so they are hard checks.  The valuation
patterns and the log-concavity question are observations; their reports
only tabulate where the observation holds.
"""
from narayana_lab.arith import (
    logconcavity_report,
    monotonicity_report,
    nu2_pattern_report,
    nu3_fact_report,
    p_integrality_search,
    parity_theorems_check,
)
from narayana_lab.errors import NoneFound
from narayana_lab.sequences import a_table

print(parity_theorems_check(128).summary())

vr = nu2_pattern_report(64)
print("nu_2(a_n), n <= 16:", [v for _, v in vr.entries[:16]])
print(vr.report.summary())
print(nu3_fact_report(100).report.summary())

# with a_1 = 2 the mu = 3 sequence has mixed denominators; a_1 = 4 makes it 5-integral
for a1 in (2, 4):
    try:
        r = p_integrality_search(3, 12, [a1])
        print(f"mu=3, a_1={a1}: p = {r.p}")
    except NoneFound as e:
        print(f"mu=3, a_1={a1}: {e}")

print(logconcavity_report(a_table(40), as_written=True, name="a").summary())
print(monotonicity_report(2, 30).summary())
