"""Narayana, generalized Narayana and Gegenbauer polynomials.

All hypergeometric expressions used here terminate, so each one is realized as
its finite sum.  Substitutions of the form x = (1+z)/(1-z) are carried out by
homogenizing, never by evaluating at a pole.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .algebra import Poly, Series, as_rational, binomial, comb, factorial, pochhammer
from .beta_moments import (
    beta_moments,
    check_mu,
    lasalle_A_mu,
    moments_to_cumulants,
    scaled_even_moment,
)
from .reports import Report
from .sequences import catalan, narayana_number

__all__ = [
    "Family",
    "NamedPoly",
    "narayana_poly",
    "narayana_poly_catalan_form",
    "gen_narayana",
    "gegenbauer",
    "gegenbauer_hypergeometric",
    "gegenbauer_generating_check",
    "gegen_narayana_check",
    "terminating_2f1",
    "narayana_finite_sums",
    "narayana_hypergeometric_forms",
    "narayana_even_form",
    "narayana_representations",
    "s_poly",
    "s_closed_form",
    "s_legendre_form",
    "lasalle_recurrence_check",
]

Z = Poly.z()
ONE = Poly.const(1)


class Family(enum.Enum):
    Narayana = "narayana"
    GenNarayana = "gen_narayana"
    Gegenbauer = "gegenbauer"
    SPoly = "s_poly"


@dataclass(frozen=True)
class NamedPoly:
    poly: Poly
    family: Family
    index: int
    mu: Optional[Fraction] = None

    @property
    def coeffs(self) -> tuple:
        return self.poly.coeffs

    def __call__(self, x) -> Fraction:
        return self.poly(x)


def narayana_poly(r: int) -> NamedPoly:
    """sum_{k=1}^{r} N(r,k) z^(k-1)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return NamedPoly(Poly(narayana_number(r, k) for k in range(1, r + 1)), Family.Narayana, r)


def narayana_poly_catalan_form(r: int) -> NamedPoly:
    """sum_m z^m (z+1)^(r-2m-1) binom(r-1, 2m) C_m."""
    if r < 1:
        raise ValueError("r must be >= 1")
    acc = Poly()
    for m in range((r - 1) // 2 + 1):
        acc = acc + Z ** m * (Z + 1) ** (r - 2 * m - 1) * (comb(r - 1, 2 * m) * catalan(m))
    return NamedPoly(acc, Family.Narayana, r)


def gen_narayana(mu, n: int) -> NamedPoly:
    """E[(1 + z + 2 sqrt(z) X)^(n-1)] expanded; only even powers of X survive.

    = sum_m binom(n-1, 2m) z^m (z+1)^(n-1-2m) E[X*^(2m)]
    """
    mu = check_mu(mu)
    if n < 1:
        raise ValueError("n must be >= 1")
    acc = Poly()
    for m in range((n - 1) // 2 + 1):
        acc = acc + Z ** m * (Z + 1) ** (n - 1 - 2 * m) * (comb(n - 1, 2 * m) * scaled_even_moment(mu, m))
    return NamedPoly(acc, Family.GenNarayana, n, mu)


def gegenbauer(mu, n: int) -> NamedPoly:
    """C_n^mu(x) = sum_k (-1)^k / k! * (mu)_(n-k) / (n-2k)! * (2x)^(n-2k)."""
    mu = as_rational(mu)
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        c = Fraction((-1) ** k, factorial(k)) * pochhammer(mu, n - k) / factorial(n - 2 * k)
        coeffs[n - 2 * k] += c * 2 ** (n - 2 * k)
    return NamedPoly(Poly(coeffs), Family.Gegenbauer, n, mu)


def terminating_2f1(a, b, c, arg: Poly, n_terms: int) -> Poly:
    """sum_{k < n_terms} (a)_k (b)_k / ((c)_k k!) arg^k as a polynomial."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    acc = Poly()
    t = Fraction(1)
    power = ONE
    for k in range(n_terms):
        if k:
            t *= (a + k - 1) * (b + k - 1) / ((c + k - 1) * k)
            power = power * arg
        acc = acc + power * t
    return acc


def gegenbauer_hypergeometric(mu, n: int) -> NamedPoly:
    """(2mu)_n / n! * 2F1(-n, n + 2mu; mu + 1/2; (1-x)/2)."""
    mu = as_rational(mu)
    arg = Poly((Fraction(1, 2), Fraction(-1, 2)))
    f = terminating_2f1(-n, n + 2 * mu, mu + Fraction(1, 2), arg, n + 1)
    return NamedPoly(f * (pochhammer(2 * mu, n) / factorial(n)), Family.Gegenbauer, n, mu)


def gegenbauer_generating_check(mu, x0, order: int) -> bool:
    """Compare sum_n C_n^mu(x0) t^n with (1 - 2 x0 t + t^2)^(-mu) as truncated series."""
    mu, x0 = as_rational(mu), as_rational(x0)
    lhs = Series([gegenbauer(mu, n)(x0) for n in range(order + 1)], order)
    rhs = Series((1, -2 * x0, 1), order).power(-mu)
    return lhs == rhs


def gegen_narayana_check(mu, n: int) -> bool:
    """(2mu+1)_n / n! * N^mu_{n+1}(z) == (1-z)^n C_n^(mu+1/2)((1+z)/(1-z))."""
    mu = check_mu(mu)
    if n < 0:
        raise ValueError("n must be >= 0")
    C = gegenbauer(mu + Fraction(1, 2), n).poly
    rhs = C.homogenize(1 + Z, 1 - Z, n)
    lhs = gen_narayana(mu, n + 1).poly * (pochhammer(2 * mu + 1, n) / factorial(n))
    return lhs == rhs


def narayana_finite_sums(n: int) -> List[NamedPoly]:
    """Three finite-sum expressions for N_{n+1}(z)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    one_minus = 1 - Z
    f1 = Poly()
    for k in range(n + 1):
        f1 = f1 + Z ** k * one_minus ** (n - k) * Fraction(comb(n, k) * comb(n + k + 2, k), k + 1)
    f2 = Poly()
    for k in range(n + 1):
        f2 = f2 + Z ** (n - k) * one_minus ** k * comb(n + 1, k) * comb(2 * n + 2 - k, n - k)
    f2 = f2 * Fraction(1, n + 1)
    f3 = Poly(Fraction(comb(n + 1, k + 1) * comb(n + 1, k), n + 1) for k in range(n + 1))
    return [NamedPoly(p, Family.Narayana, n + 1) for p in (f1, f2, f3)]


def narayana_hypergeometric_forms(n: int) -> List[NamedPoly]:
    """The three terminating 2F1 expressions for N_{n+1}(z).

    (1-z)^n 2F1(-n, n+3; 2; z/(z-1)),
    (2n+2)!/((n+2)!(n+1)!) z^n 2F1(-n, -n-1; -2n-2; (z-1)/z),
    2F1(-n, -n-1; 2; z).
    Rational arguments are cleared term by term.
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def coeff(a, b, c, k):
        return pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * factorial(k))

    h1 = Poly()
    for k in range(n + 1):
        # (z/(z-1))^k (1-z)^n = (-1)^k z^k (1-z)^(n-k)
        h1 = h1 + Z ** k * (1 - Z) ** (n - k) * ((-1) ** k * coeff(-n, n + 3, 2, k))
    h2 = Poly()
    for k in range(n + 1):
        h2 = h2 + (Z - 1) ** k * Z ** (n - k) * coeff(-n, -n - 1, -2 * n - 2, k)
    h2 = h2 * Fraction(factorial(2 * n + 2), factorial(n + 2) * factorial(n + 1))
    h3 = terminating_2f1(-n, -n - 1, 2, Z, n + 1)
    return [NamedPoly(p, Family.Narayana, n + 1) for p in (h1, h2, h3)]


def narayana_even_form(n: int) -> NamedPoly:
    """1/(2^(n-1)(n+2)) sum_k (-1)^k binom(n,k) binom(2n+1-2k, n-2k) (1-z)^(2k) (1+z)^(n-2k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = Poly()
    for k in range(n // 2 + 1):
        c = (-1) ** k * comb(n, k) * comb(2 * n + 1 - 2 * k, n - 2 * k)
        acc = acc + (1 - Z) ** (2 * k) * (1 + Z) ** (n - 2 * k) * c
    scale = Fraction(2) ** (1 - n) / (n + 2)
    return NamedPoly(acc * scale, Family.Narayana, n + 1)


def narayana_representations(n: int) -> dict:
    """Every available expression for N_{n+1}(z), keyed by name."""
    reps = {
        "defining_sum": narayana_poly(n + 1),
        "catalan_form": narayana_poly_catalan_form(n + 1),
        "even_form": narayana_even_form(n),
        "moment_form": gen_narayana(1, n + 1),
    }
    for i, p in enumerate(narayana_finite_sums(n), start=1):
        reps[f"finite_sum_{i}"] = p
    for i, p in enumerate(narayana_hypergeometric_forms(n), start=1):
        reps[f"hypergeometric_{i}"] = p
    return reps


def s_poly(n: int) -> NamedPoly:
    """S_n(z) = z N_n(z)."""
    return NamedPoly(Z * narayana_poly(n).poly, Family.SPoly, n)


def s_closed_form(n: int, k_max: Optional[int] = None) -> NamedPoly:
    """2^-(n+1) sum_k (-1)^k/(n+1-k) binom(2n-2k, n-k) binom(n+1-k, k) (z-1)^(2k) (z+1)^(n+1-2k).

    The sum runs over 0 <= k <= floor((n+1)/2), which is what expanding the
    Legendre form term by term produces.  Passing ``k_max=n // 2`` stops one
    term early; for odd n that drops a nonzero term and the result is wrong.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k_max is None:
        k_max = (n + 1) // 2
    acc = Poly()
    for k in range(k_max + 1):
        c = Fraction((-1) ** k * comb(2 * n - 2 * k, n - k) * comb(n + 1 - k, k), n + 1 - k)
        acc = acc + (Z - 1) ** (2 * k) * (Z + 1) ** (n + 1 - 2 * k) * c
    return NamedPoly(acc * Fraction(1, 2 ** (n + 1)), Family.SPoly, n)


def s_legendre_form(n: int) -> NamedPoly:
    """-1/2 (z-1)^(n+1) C_{n+1}^(-1/2)((z+1)/(z-1))."""
    C = gegenbauer(Fraction(-1, 2), n + 1).poly
    return NamedPoly(C.homogenize(Z + 1, Z - 1, n + 1) * Fraction(-1, 2), Family.SPoly, n)


def lasalle_recurrence_check(mu, r_max: int) -> Report:
    """Verify (1+z) N_r - N_{r+1} = sum_m (-z)^m binom(r-1, 2m-1) A_m^mu N_{r+1-2m} for 2 <= r <= r_max.

    Two coefficient routes are checked: A_m^mu from the Bessel zeta values, and
    (-1)^(m+1) kappa*(2m) from the moment/cumulant convolution.
    """
    mu = check_mu(mu)
    N = [None] + [gen_narayana(mu, r).poly for r in range(1, r_max + 2)]
    m_max = r_max // 2 + 1
    A_zeta = [None] + [lasalle_A_mu(mu, m) for m in range(1, m_max + 1)]
    kappa = moments_to_cumulants(beta_moments(mu, 2 * m_max))
    A_cum = [None] + [(-1) ** (m + 1) * kappa[2 * m] for m in range(1, m_max + 1)]
    rep = Report(f"Lasalle recurrence, mu={mu}")
    rep.add("zeta_equals_cumulant_coefficients", A_zeta[1:] == A_cum[1:], mu=str(mu))
    for r in range(2, r_max + 1):
        lhs = (1 + Z) * N[r] - N[r + 1]
        for name, A in (("zeta_coefficients", A_zeta), ("cumulant_coefficients", A_cum)):
            rhs = Poly()
            m = 1
            while 2 * m - 1 <= r - 1:
                rhs = rhs + (-Z) ** m * N[r + 1 - 2 * m] * (comb(r - 1, 2 * m - 1) * A[m])
                m += 1
            rep.add(name, lhs == rhs, r=r)
    return rep
