"""Floating-point Bessel zeros and truncated Rayleigh sums.

This is the only floating-point part of the library.  The truncated sums with
their tail estimate are compared with the exact rational zeta values.
"""
from fractions import Fraction

from narayana_lab import bessel_zeta
from narayana_lab.bessel_numeric import bessel_zero_numeric, bessel_zeros, bessel_zeta_numeric

print("first zeros of J_1:", bessel_zeros(1, 5))
print("j_{1,1} =", bessel_zero_numeric(1, 1))

for mu, K in ((1, 200), (Fraction(1, 2), 10 ** 4), (0, 500)):
    exact = bessel_zeta(mu, 1)[1]
    approx = bessel_zeta_numeric(mu, 1, K)
    print(f"zeta_{mu}(2): exact {exact} = {float(exact):.15f}, K={K}: {approx:.15f}")
