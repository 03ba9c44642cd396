"""Bessel-ratio generating functions checked as truncated power series.

Every modified Bessel function enters through its normalized power series

    Gamma(nu+1) (t/2)^(-nu) I_nu(t) = sum_j (t/2)^(2j) / (j! (nu+1)_j),

so no special-function evaluation is involved.  The hyperbolic functions used
for mu = +-1/2 are built from ``Series.exp``.

Some identities below are stated in a corrected form; the as-printed variant
is kept alongside so a report can show where the two differ.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from .algebra import Series, as_rational, factorial, pochhammer
from .beta_moments import a_half_closed, a_mu_table, a_neg_half_closed, check_mu
from .hessenberg import build_B, hessenberg_minors
from .reports import AGREES, DISAGREES, Report
from .sequences import a_table, b_table

__all__ = [
    "SeriesCheck",
    "bessel_i_normalized",
    "sinh_cosh",
    "lemma_product_check",
    "mu0_quotient_check",
    "bessel_ratio_check",
    "i1_determinant_check",
    "i1_determinant_log_check",
    "i1_determinant_printed_check",
    "coth_identity_check",
    "tanh_identity_check",
    "half_identities_printed_checks",
    "series_identities_report",
]


@dataclass(frozen=True)
class SeriesCheck:
    name: str
    lhs: Series
    rhs: Series

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def first_mismatch(self) -> Optional[int]:
        for k, (x, y) in enumerate(zip(self.lhs.coeffs, self.rhs.coeffs)):
            if x != y:
                return k
        return None


def bessel_i_normalized(nu, order: int) -> Series:
    """sum_j y^j / (j! (nu+1)_j) in the variable y = (t/2)^2."""
    nu = as_rational(nu)
    return Series.from_function(lambda j: 1 / (factorial(j) * pochhammer(nu + 1, j)), order)


def sinh_cosh(order: int):
    """(sinh x, cosh x) from exp(x) and exp(-x)."""
    e_pos = Series.x(order).exp()
    e_neg = (-Series.x(order)).exp()
    return (e_pos - e_neg) / 2, (e_pos + e_neg) / 2


def _alternating(order: int, coeff: Callable[[int], Fraction], even: bool = False) -> Series:
    """sum_{j>=1} (-1)^(j-1) coeff(j) x^(j-1), or x^(2j-2) when ``even``."""
    step = 2 if even else 1
    out = [Fraction(0)] * (order + 1)
    j = 1
    while step * (j - 1) <= order:
        out[step * (j - 1)] = (-1) ** (j - 1) * coeff(j)
        j += 1
    return Series(out, order)


def lemma_product_check(order: int = 15) -> SeriesCheck:
    """(sum y^j/(j!(j+1)!)) * (sum (-1)^(j-1) a_j y^(j-1)/((j+1)!(j-1)!)) = 2 sum y^j/(j!(j+2)!)."""
    a = a_table(order + 1)
    left = Series.from_function(lambda j: Fraction(1, factorial(j) * factorial(j + 1)), order)
    ratio = _alternating(order, lambda j: a[j - 1] / (factorial(j + 1) * factorial(j - 1)))
    right = Series.from_function(lambda j: Fraction(2, factorial(j) * factorial(j + 2)), order)
    return SeriesCheck("lemma_product", left * ratio, right)


def mu0_quotient_check(order: int = 15) -> SeriesCheck:
    """I_1(2x)/(x I_0(2x)) = sum (-1)^(j-1) b_j y^(j-1)/(j!(j-1)!), with y = x^2."""
    b = b_table(order + 1)
    quotient = bessel_i_normalized(1, order) / bessel_i_normalized(0, order)
    rhs = _alternating(order, lambda j: b[j - 1] / (factorial(j) * factorial(j - 1)))
    return SeriesCheck("mu0_quotient", quotient, rhs)


def bessel_ratio_check(mu, order: int = 15) -> SeriesCheck:
    """I_{mu+1}(2x)/(x I_mu(2x)) = sum (-1)^(n-1) a_n(mu) y^(n-1) / (2 (n-1)! (mu+1)_n), y = x^2.

    a_n(mu) is taken from the recurrence route.
    """
    mu = check_mu(mu)
    a = a_mu_table(mu, order + 1)
    quotient = bessel_i_normalized(mu + 1, order) / bessel_i_normalized(mu, order) / (mu + 1)
    rhs = _alternating(order, lambda n: a[n - 1] / (2 * factorial(n - 1) * pochhammer(mu + 1, n)))
    return SeriesCheck(f"bessel_ratio(mu={mu})", quotient, rhs)


def _det_exponent(order: int, scale: Fraction) -> Series:
    dets = hessenberg_minors(build_B(order))
    return Series.from_function(
        lambda j: scale * (-1) ** (j - 1) * dets[j] / (factorial(j + 1) * factorial(j) ** 2), order, start=1
    )


def i1_determinant_check(order: int = 15) -> SeriesCheck:
    """I_1(t) = (t/2) exp(sum (-1)^(j-1) det B_j (t/2)^(2j) / (2 (j+1)! j!^2)).

    Compared in y = (t/2)^2 after dividing by t/2; the log of the left side is
    also compared with the exponent.
    """
    exponent = _det_exponent(order, Fraction(1, 2))
    left = bessel_i_normalized(1, order)
    return SeriesCheck("i1_determinant", left, exponent.exp())


def i1_determinant_log_check(order: int = 15) -> SeriesCheck:
    return SeriesCheck("i1_determinant_log", bessel_i_normalized(1, order).log(), _det_exponent(order, Fraction(1, 2)))


def i1_determinant_printed_check(order: int = 15) -> SeriesCheck:
    """The version with prefactor t and no 1/2 in the exponent, divided by t/2 like the corrected one."""
    exponent = _det_exponent(order, Fraction(1))
    return SeriesCheck("i1_determinant_as_printed", bessel_i_normalized(1, order), exponent.exp() * 2)


def _coth_side(order: int) -> Series:
    """(x coth x - 1)/x^2 to the given order."""
    sh, ch = sinh_cosh(order + 3)
    x_coth = ch / sh.shift_down(1)
    return (x_coth - 1).shift_down(2).truncate(order)


def _tanh_side(order: int) -> Series:
    """tanh x / x to the given order."""
    sh, ch = sinh_cosh(order + 1)
    return (sh.shift_down(1) / ch.truncate(order)).truncate(order)


def coth_identity_check(order: int = 15, source: str = "closed") -> SeriesCheck:
    """(x coth x - 1)/x^2 = sum (-1)^(n-1) n a_n(1/2) x^(2n-2) / (2n+1)!.

    ``source`` selects the Bernoulli closed form ("closed") or the recurrence ("recurrence").
    """
    a = _a_values(Fraction(1, 2), order, source)
    rhs = _alternating(order, lambda n: n * a[n - 1] / factorial(2 * n + 1), even=True)
    return SeriesCheck(f"coth_identity[{source}]", _coth_side(order), rhs)


def tanh_identity_check(order: int = 15, source: str = "closed") -> SeriesCheck:
    """tanh x / x = sum (-1)^(n-1) a_n(-1/2) x^(2n-2) / (2 (2n-1)!)."""
    a = _a_values(Fraction(-1, 2), order, source)
    rhs = _alternating(order, lambda n: a[n - 1] / (2 * factorial(2 * n - 1)), even=True)
    return SeriesCheck(f"tanh_identity[{source}]", _tanh_side(order), rhs)


def _a_values(mu: Fraction, order: int, source: str) -> List[Fraction]:
    n_max = order // 2 + 1
    if source == "recurrence":
        return a_mu_table(mu, n_max)
    if source != "closed":
        raise ValueError("source must be 'closed' or 'recurrence'")
    f = a_half_closed if mu > 0 else a_neg_half_closed
    return [f(n) for n in range(1, n_max + 1)]


def half_identities_printed_checks(order: int = 15) -> List[SeriesCheck]:
    """The mu = +-1/2 expansions exactly as printed: tanh on the left for mu = 1/2, coefficient 2 a_j."""
    a_p = _a_values(Fraction(1, 2), order, "closed")
    a_m = _a_values(Fraction(-1, 2), order, "closed")
    sh, ch = sinh_cosh(order + 3)
    x_tanh = sh / ch.truncate(order + 3) * Series.x(order + 3)
    lhs_p = (x_tanh - 1)
    # x tanh x - 1 has constant term -1, so the quotient by x^2 is not a power series;
    # compare x^2 * rhs with x tanh x - 1 instead.
    rhs_p = _alternating(order, lambda j: 2 * a_p[j - 1] / ((2 * j + 1) * factorial(2 * j - 1)), even=True)
    rhs_p = Series([0, 0] + list(rhs_p.coeffs), order + 2)
    rhs_m = _alternating(order, lambda j: 2 * a_m[j - 1] / factorial(2 * j - 1), even=True)
    return [
        SeriesCheck("x_tanh_identity_as_printed", lhs_p.truncate(order + 2), rhs_p),
        SeriesCheck("tanh_identity_as_printed", _tanh_side(order), rhs_m),
    ]


def series_identities_report(order: int = 15, mus=(0, Fraction(1, 2), 1, 2, 3)) -> Report:
    rep = Report(f"series identities to order {order}")
    checks = [
        lemma_product_check(order),
        mu0_quotient_check(order),
        i1_determinant_check(order),
        i1_determinant_log_check(order),
        coth_identity_check(order, "closed"),
        coth_identity_check(order, "recurrence"),
        tanh_identity_check(order, "closed"),
        tanh_identity_check(order, "recurrence"),
    ]
    checks += [bessel_ratio_check(mu, order) for mu in mus]
    for c in checks:
        rep.add(c.name, c.holds, first_mismatch=c.first_mismatch)
    for c in [i1_determinant_printed_check(order)] + half_identities_printed_checks(order):
        rep.add(c.name, AGREES if c.holds else DISAGREES, first_mismatch=c.first_mismatch)
    rep.notes.append(
        "as-printed variants are tabulated only; the hard checks use prefactor t/2 with a 1/2 in the "
        "exponent, coth for mu = 1/2 and coefficients a_n/4 of the printed ones for mu = +-1/2"
    )
    return rep
