from fractions import Fraction

import pytest

from narayana_lab.algebra import Poly
from narayana_lab.narayana_poly import (
    Family,
    gegen_narayana_check,
    gegenbauer,
    gegenbauer_generating_check,
    gegenbauer_hypergeometric,
    gen_narayana,
    lasalle_recurrence_check,
    narayana_even_form,
    narayana_poly,
    narayana_poly_catalan_form,
    narayana_representations,
    s_closed_form,
    s_legendre_form,
    s_poly,
    terminating_2f1,
)
from narayana_lab.sequences import catalan

HALF = Fraction(1, 2)
Z = Poly.z()


def test_small_narayana_polys():
    assert narayana_poly(1).poly == Poly((1,))
    assert narayana_poly(3).poly == Poly((1, 3, 1))
    assert narayana_poly(4).family is Family.Narayana and narayana_poly(4).index == 4


@pytest.mark.parametrize("r", range(1, 41))
def test_narayana_invariants(r):
    p = narayana_poly(r).poly
    assert p.degree == r - 1
    assert all(c > 0 and c.denominator == 1 for c in p.coeffs)
    assert p.is_palindromic()
    if r <= 20:
        assert p(1) == catalan(r)


def test_catalan_form_small_case():
    assert narayana_poly_catalan_form(3).poly == Z * 1 + (Z + 1) ** 2


@pytest.mark.parametrize("n", range(0, 26))
def test_all_representations_agree(n):
    reps = narayana_representations(n)
    ref = reps.pop("defining_sum").poly
    assert len(reps) >= 9
    for name, p in reps.items():
        assert p.poly == ref, name


@pytest.mark.parametrize("mu", [0, HALF, 2, Fraction(-1, 2), Fraction(5, 3)])
def test_gen_narayana_palindromic_monic(mu):
    for n in range(1, 15):
        p = gen_narayana(mu, n).poly
        assert p.is_palindromic()
        assert p.coeffs[0] == 1 and p.coeffs[-1] == 1


def test_gen_narayana_at_one_is_narayana():
    for n in range(1, 20):
        assert gen_narayana(1, n).poly == narayana_poly(n).poly


def test_gegenbauer_known():
    assert gegenbauer(1, 2).poly == Poly((-1, 0, 4))
    assert gegenbauer(HALF, 2).poly == Poly((-HALF, 0, Fraction(3, 2)))  # Legendre P_2
    assert gegenbauer(Fraction(3, 2), 2).poly == Poly((Fraction(-3, 2), 0, Fraction(15, 2)))
    assert gegenbauer(2, 0).poly == Poly((1,))


@pytest.mark.parametrize("mu", [HALF, 1, Fraction(3, 2), Fraction(-1, 2), Fraction(2, 7)])
def test_gegenbauer_generating_function(mu):
    for x0 in (0, HALF, 3, Fraction(-2, 5)):
        assert gegenbauer_generating_check(mu, x0, 12)


@pytest.mark.parametrize("mu", [HALF, 1, Fraction(3, 2), Fraction(2, 3)])
def test_gegenbauer_hypergeometric_form(mu):
    for n in range(12):
        assert gegenbauer_hypergeometric(mu, n).poly == gegenbauer(mu, n).poly


def test_terminating_2f1_small():
    # 2F1(-1, b; c; z) = 1 - b z / c
    assert terminating_2f1(-1, 3, 2, Z, 2) == Poly((1, Fraction(-3, 2)))


@pytest.mark.parametrize("mu", [0, HALF, 1, 2])
def test_gegen_narayana(mu):
    assert all(gegen_narayana_check(mu, n) for n in range(21))


def test_gegen_narayana_negative_control():
    # mu = 1, n = 4: (3)_4 / 4! N_5 equals the homogenized C_4^(3/2) but not C_4^2
    lhs = gen_narayana(1, 5).poly * Fraction(3 * 4 * 5 * 6, 24)
    assert gegenbauer(Fraction(3, 2), 4).poly.homogenize(1 + Z, 1 - Z, 4) == lhs
    assert gegenbauer(2, 4).poly.homogenize(1 + Z, 1 - Z, 4) != lhs


def test_even_form_small():
    assert narayana_even_form(2).poly == narayana_poly(3).poly


def test_s_closed_form_example():
    assert s_closed_form(2).poly == Z + Z ** 2


@pytest.mark.parametrize("n", range(1, 31))
def test_s_forms_and_symmetry(n):
    s = s_poly(n).poly
    assert s == Z * narayana_poly(n).poly
    assert s_closed_form(n).poly == s
    assert s_legendre_form(n).poly == s
    assert s.reverse(n + 1) == s


def test_s_closed_form_with_short_range():
    # stopping at floor(n/2) loses the last term exactly when n is odd
    for n in range(1, 20):
        short = s_closed_form(n, k_max=n // 2).poly
        assert (short == s_poly(n).poly) == (n % 2 == 0)


def test_lasalle_mu1_r3_by_hand():
    N = {r: narayana_poly(r).poly for r in range(1, 5)}
    assert (Z + 1) * N[3] - N[4] == -Z * 2 * 1 * N[2]


@pytest.mark.parametrize("mu,r_max", [(1, 25), (0, 20), (HALF, 20), (2, 20)])
def test_lasalle_recurrence(mu, r_max):
    rep = lasalle_recurrence_check(mu, r_max)
    assert rep.ok
    assert rep.count("pass", "zeta_coefficients") == r_max - 1
