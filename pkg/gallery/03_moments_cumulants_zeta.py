"""From symmetric beta moments to cumulants to Bessel zeta values.

Cumulants of the scaled symmetric beta law are rational multiples of the
Rayleigh sums zeta_mu(2m) = sum_k j_{mu,k}^(-2m).  For mu = 1 they give the
Lasalle numbers up to sign.
"""
from fractions import Fraction

from narayana_lab import (
    A_table,
    bessel_zeta,
    beta_moments,
    cumulant_partition_oracle,
    moments_to_cumulants,
)
from narayana_lab.beta_moments import a_half_closed, a_neg_half_closed, bernoulli

m = beta_moments(1, 12)
kappa = moments_to_cumulants(m)
print("Catalan moments:", [str(m[k]) for k in range(0, 13, 2)])
print("signed even cumulants:", [str((-1) ** (n + 1) * kappa[2 * n]) for n in range(1, 7)])
print("Lasalle numbers:      ", [str(v) for v in A_table(6)])
print("set partition oracle agrees for n <= 6:",
      all(cumulant_partition_oracle(m, n) == kappa[n] for n in range(1, 7)))

for mu in (0, Fraction(1, 2), 1):
    print(f"zeta_{mu}(2..8):", [str(v) for v in bessel_zeta(mu, 4).values])

# mu = +-1/2 reduce to Bernoulli and Euler numbers
print("a_n(1/2): ", [str(a_half_closed(n)) for n in range(1, 6)])
print("a_n(-1/2):", [str(a_neg_half_closed(n)) for n in range(1, 6)])
print("B_2..B_10:", [str(bernoulli(k)) for k in range(2, 11, 2)])
