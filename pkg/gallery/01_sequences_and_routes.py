"""Lasalle numbers and the sequence a_n, computed along every route.

The integers a_n can be reached by a convolution recurrence, a quadratic
recurrence, a symmetric sum, a Hessenberg determinant and a closed form in
Bessel zeta values.  All of them are exact, so agreement is equality.
"""
from narayana_lab import A_table, Route, a_table, a_via_det, b_table, seq_a_sym
from narayana_lab.beta_moments import a_mu_closed

N = 12

print("A_n:", A_table(8))
print("a_n:", a_table(N))
print("b_n:", b_table(8))

routes = {
    "def": a_table(N),
    "quad": a_table(N, Route.QuadraticRecurrence),
    "sym": [2] + [seq_a_sym(n).value for n in range(2, N + 1)],
    "det": [a_via_det(n).value for n in range(1, N + 1)],
    "closed": [a_mu_closed(1, n) for n in range(1, N + 1)],
}
for name, vals in routes.items():
    print(f"{name:>6}: {'same' if vals == routes['def'] else 'DIFFERENT'}")

# the determinant route is easy to push further; the values grow fast
print("a_30 =", a_via_det(30).value)
