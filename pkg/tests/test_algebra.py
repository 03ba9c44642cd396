import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from narayana_lab.algebra import Poly, Series, as_rational, binomial, comb, factorial, pochhammer
from narayana_lab.errors import DivByNonUnit, ExpNonzeroConstant, LogNonUnitConstant

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)
polys = st.lists(fractions, max_size=6).map(Poly)


def series_st(order=8, const=None):
    def build(cs):
        if const is not None:
            cs = [const] + cs[1:]
        return Series(cs, order)
    return st.lists(fractions, min_size=order + 1, max_size=order + 1).map(build)


# --- scalars ---------------------------------------------------------------

@pytest.mark.parametrize("x", ["1/2", "-3/7", 5, Fraction(2, 9), " 4/6 "])
def test_as_rational_accepts_exact_inputs(x):
    assert isinstance(as_rational(x), Fraction)


@pytest.mark.parametrize("x", [0.5, "0.5", "1e3", True, None, [1]])
def test_as_rational_refuses_inexact_inputs(x):
    with pytest.raises((TypeError, ValueError)):
        as_rational(x)


def test_comb_edges():
    assert comb(5, -1) == 0 and comb(5, 6) == 0 and comb(0, 0) == 1 and comb(6, 3) == 20


@given(st.integers(0, 30), st.integers(0, 30))
def test_binomial_matches_factorial_formula(n, k):
    expected = math.factorial(n) // (math.factorial(k) * math.factorial(n - k)) if k <= n else 0
    assert binomial(n, k) == expected == comb(n, k)


@given(fractions, st.integers(0, 8))
def test_binomial_general_is_falling_factorial_over_factorial(x, k):
    prod = Fraction(1)
    for i in range(k):
        prod *= x - i
    assert binomial(x, k) == prod / math.factorial(k)


def test_binomial_half_integer():
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binomial(-1, 3) == -1


def test_pochhammer():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(5, 0) == 1
    assert pochhammer(1, 6) == factorial(6)


# --- polynomials -----------------------------------------------------------

@given(polys, polys, polys)
def test_poly_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly()


@given(polys, polys, fractions)
def test_poly_evaluation_is_a_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


def test_poly_basics():
    z = Poly.z()
    p = (1 + z) ** 3
    assert p.coeffs == (1, 3, 3, 1)
    assert p.degree == 3 and Poly().degree == -1
    assert p.is_palindromic()
    assert p.derivative() == 3 * (1 + z) ** 2
    assert str(Poly((1, -2, 1))) == "1 - 2*z + z^2"
    assert Poly((0, 0, 0)).is_zero()


@given(polys, fractions, fractions, fractions)
def test_compose_linear(p, a, b, x):
    assert p.compose_linear(a, b)(x) == p(a * x + b)


@given(polys)
def test_reverse_twice_is_identity(p):
    d = max(p.degree, 0) + 2
    assert p.reverse(d).reverse(d) == p


@given(polys, fractions)
def test_homogenize_agrees_with_evaluation(p, x):
    z = Poly.z()
    n = max(p.degree, 0) + 1
    h = p.homogenize(1 + z, 1 - z, n)
    if x != 1:
        assert h(x) == (1 - x) ** n * p((1 + x) / (1 - x))


def test_reverse_and_homogenize_reject_small_degree():
    with pytest.raises(ValueError):
        Poly((1, 2, 3)).reverse(1)
    with pytest.raises(ValueError):
        Poly((1, 2, 3)).homogenize(Poly.z(), Poly.const(1), 1)


# --- series ----------------------------------------------------------------

def test_series_shape_and_mixed_orders():
    s = Series((1, 2, 3, 4, 5), 2)
    assert s.coeffs == (1, 2, 3)
    t = Series((1,), 5)
    assert len(t.coeffs) == 6
    assert (s + t).order == 2 and (s * t).order == 2


@settings(max_examples=40)
@given(series_st(const=Fraction(0)))
def test_log_exp_inverse(f):
    assert f.exp().log() == f


@settings(max_examples=40)
@given(series_st(const=Fraction(1)))
def test_exp_log_inverse(g):
    assert g.log().exp() == g


@settings(max_examples=40)
@given(series_st(), series_st().filter(lambda s: s[0] != 0))
def test_division_round_trip(a, b):
    assert (a / b) * b == a


def test_exp_of_x_is_reciprocal_factorials():
    e = Series.x(10).exp()
    assert e.coeffs == tuple(Fraction(1, math.factorial(k)) for k in range(11))


def test_power_matches_binomial_series():
    s = Series((1, 1), 8).power(Fraction(1, 2))
    assert s.coeffs == tuple(binomial(Fraction(1, 2), k) for k in range(9))
    assert Series((1, 1), 6).power(3).coeffs[:4] == (1, 3, 3, 1)


def test_series_errors():
    with pytest.raises(DivByNonUnit):
        Series((1,), 3) / Series((0, 1), 3)
    with pytest.raises(ZeroDivisionError):
        Series((1,), 3) / Series((0, 1), 3)
    with pytest.raises(ExpNonzeroConstant):
        Series((1, 1), 3).exp()
    with pytest.raises(LogNonUnitConstant):
        Series((2, 1), 3).log()
    with pytest.raises(ValueError):
        Series((1, 1), 3).shift_down(1)


def test_series_calculus_and_substitution():
    s = Series((1, 1, 1, 1), 3)
    assert s.derivative().coeffs == (1, 2, 3)
    assert s.integral().coeffs == (0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))
    assert s.subs_power(2).coeffs == (1, 0, 1, 0)
    assert Series((0, 0, 5, 6), 3).shift_down(2).coeffs == (5, 6)
    assert s.to_poly() == Poly((1, 1, 1, 1))
