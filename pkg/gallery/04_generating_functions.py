"""Power-series identities checked coefficient by coefficient.

Each check builds both sides as truncated series over the rationals.  Three
variants that are printed with a different constant are kept for comparison
and do not agree with the computed series.
"""
from narayana_lab.generating import series_identities_report, tanh_identity_check

rep = series_identities_report(order=15)
print(rep.summary())

c = tanh_identity_check(10)
print("tanh(x)/x coefficients:", [str(v) for v in c.lhs.coeffs])
