"""Narayana polynomials in their many disguises.

The row polynomial N_{n+1}(z) has a defining sum, a Catalan-weighted form,
three finite sums, three terminating hypergeometric forms, an even-part form
and a moment form.  Below they are all built for one n and compared.
"""
from fractions import Fraction

from narayana_lab import gegen_narayana_check, gegenbauer, narayana_representations
from narayana_lab.narayana_poly import s_closed_form, s_legendre_form, s_poly

n = 6
reps = narayana_representations(n)
ref = reps["defining_sum"].poly
print(f"N_{n + 1}(z) = {ref}")
for name, p in reps.items():
    print(f"  {name:<16} {'ok' if p.poly == ref else 'differs'}")

# Gegenbauer polynomials are the generalized Narayana polynomials after z -> (1+z)/(1-z)
print("C_3^(3/2)(x) =", gegenbauer(Fraction(3, 2), 3).poly)
print("link holds for mu = 0, 1/2, 1, 2:",
      all(gegen_narayana_check(mu, k) for mu in (0, Fraction(1, 2), 1, 2) for k in range(10)))

# S_n = z N_n(z); closed form and Legendre-type form
for k in (4, 5):
    s = s_poly(k).poly
    print(f"S_{k} = {s}   closed form ok: {s_closed_form(k).poly == s}   legendre ok: {s_legendre_form(k).poly == s}")
