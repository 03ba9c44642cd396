from fractions import Fraction
from math import comb, factorial

import pytest

from narayana_lab.beta_moments import (
    CumulantSeq,
    MomentSeq,
    a_half_closed,
    a_mu_closed,
    a_mu_recur,
    a_mu_table,
    a_neg_half_closed,
    bernoulli,
    bessel_zeta,
    beta_moments,
    check_mu,
    cumulant_from_zeta,
    cumulant_partition_oracle,
    cumulants_to_moments,
    euler_odd,
    lasalle_A_mu,
    moments_to_cumulants,
    scaled_cumulant,
    scaled_even_moment,
    set_partitions,
    unscaled_cumulant,
    verify_bernoulli_euler_identities,
)
from narayana_lab.errors import BadMu, EvenIndex, OutOfRange, TooLarge
from narayana_lab.reports import DISAGREES
from narayana_lab.sequences import A_table, a_table, b_table, catalan

HALF = Fraction(1, 2)


def akiyama_tanigawa(n):
    """B_n with B_1 = +1/2; an algorithm independent of the defining recursion."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


# tan x = sum T_k x^(2k-1)/(2k-1)!, published values
TANGENT = [1, 2, 16, 272, 7936, 353792, 22368256, 1903757312]


def test_check_mu():
    assert check_mu("1/2") == HALF
    for bad in (-1, "-3/2", 0.5):
        with pytest.raises(BadMu):
            check_mu(bad)


def test_catalan_moments():
    m = beta_moments(1, 12)
    assert [m[2 * k] for k in range(7)] == [catalan(k) for k in range(7)]
    assert m.is_symmetric and len(m) == 13


def test_special_moments():
    # arcsine: binom(2n, n); uniform: 4^n/(2n+1); Rademacher: 4^n
    for n in range(8):
        assert scaled_even_moment(0, n) == comb(2 * n, n)
        assert scaled_even_moment(HALF, n) == Fraction(4 ** n, 2 * n + 1)
        assert scaled_even_moment(-HALF, n) == 4 ** n


def test_zeta_known_values():
    z1 = bessel_zeta(1, 3)
    assert list(z1.values) == [Fraction(1, 8), Fraction(1, 192), Fraction(1, 3072)]
    assert bessel_zeta(0, 2)[1] == Fraction(1, 4) and bessel_zeta(0, 2)[2] == Fraction(1, 32)
    # j_{1/2,k} = k pi, so zeta_{1/2}(2) = 1/6
    assert bessel_zeta(HALF, 1)[1] == Fraction(1, 6)
    with pytest.raises(IndexError):
        bessel_zeta(1, 2)[0]


@pytest.mark.parametrize("mu", [0, HALF, 1, 2, Fraction(-1, 3)])
def test_zeta_first_value(mu):
    assert bessel_zeta(mu, 1)[1] == 1 / (4 * (Fraction(mu) + 1))


def test_cumulants_from_catalan_moments_give_lasalle():
    k = moments_to_cumulants(beta_moments(1, 40))
    A = A_table(20)
    for n in range(1, 21):
        assert (-1) ** (n + 1) * k[2 * n] == A[n - 1]
        assert k[2 * n - 1] == 0


@pytest.mark.parametrize("mu", [0, HALF, 1, 3, Fraction(-1, 2)])
def test_cumulant_zeta_theorem(mu):
    k = moments_to_cumulants(beta_moments(mu, 24))
    for n in range(1, 13):
        assert k[2 * n] == cumulant_from_zeta(mu, 2 * n)
        assert cumulant_from_zeta(mu, 2 * n - 1) == 0


def test_lasalle_A_mu_at_one():
    assert [lasalle_A_mu(1, n) for n in range(1, 7)] == [1, 1, 5, 56, 1092, 32670]


def test_moment_cumulant_round_trip():
    m = MomentSeq([1, 3, -2, Fraction(5, 7), 0, 11, 4])
    assert cumulants_to_moments(moments_to_cumulants(m)) == m
    assert not m.is_symmetric


def test_scaling_helpers():
    k = cumulant_from_zeta(1, 4)
    assert scaled_cumulant(unscaled_cumulant(k, 4), 4) == k
    assert unscaled_cumulant(k, 4) == k / 16


def test_set_partitions_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(n)) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


@pytest.mark.parametrize("mu", [1, 0, HALF])
def test_partition_oracle(mu):
    m = beta_moments(mu, 10)
    k = moments_to_cumulants(m)
    for n in range(1, 9):
        assert cumulant_partition_oracle(m, n) == k[n]


def test_partition_oracle_limits():
    m = beta_moments(1, 12)
    with pytest.raises(TooLarge):
        cumulant_partition_oracle(m, 11)
    with pytest.raises(OutOfRange):
        cumulant_partition_oracle(m, 0)


def test_bernoulli_against_akiyama_tanigawa():
    for n in range(0, 40):
        expected = akiyama_tanigawa(n)
        if n == 1:
            expected = -expected
        assert bernoulli(n) == expected
    assert bernoulli(1) == Fraction(-1, 2)


def test_euler_odd_values():
    assert [euler_odd(n) for n in (1, 3, 5)] == [Fraction(-1, 2), Fraction(1, 4), Fraction(-1, 2)]
    with pytest.raises(EvenIndex):
        euler_odd(2)


def test_euler_odd_against_tangent_numbers():
    # tan x = sum T_(2k-1) x^(2k-1)/(2k-1)!, and E_(2k-1) = (-1)^k T_(2k-1) / 2^(2k-1)
    for k, t in enumerate(TANGENT, start=1):
        assert euler_odd(2 * k - 1) == Fraction((-1) ** k * t, 2 ** (2 * k - 1))


def test_a_mu_published_lists():
    assert [a_mu_closed(HALF, n) for n in range(1, 6)] == [2, Fraction(4, 3), Fraction(32, 9), Fraction(96, 5),
                                                          Fraction(512, 3)]
    assert [a_mu_closed(-HALF, n) for n in range(1, 6)] == [2, 4, 32, 544, 15872]
    assert a_mu_table(2, 7) == [2, Fraction(2, 3), Fraction(8, 9), Fraction(7, 3), Fraction(88, 9),
                                Fraction(1594, 27), Fraction(1448, 3)]
    assert a_mu_table(3, 7) == [2, HALF, HALF, Fraction(39, 40), 3, Fraction(263, 20), Fraction(309, 4)]


@pytest.mark.parametrize("mu", [0, HALF, 1, 2, 3, Fraction(-1, 2), Fraction(2, 3)])
def test_closed_form_matches_recurrence(mu):
    assert [a_mu_closed(mu, n) for n in range(1, 21)] == a_mu_table(mu, 20)


def test_special_closed_forms():
    assert [a_half_closed(n) for n in range(1, 21)] == a_mu_table(HALF, 20)
    assert [a_neg_half_closed(n) for n in range(1, 21)] == a_mu_table(-HALF, 20)
    assert [a_mu_closed(1, n) for n in range(1, 21)] == a_table(20)
    assert [a_mu_closed(0, n) / 2 for n in range(1, 21)] == b_table(20)


def test_a_mu_recur_seed():
    assert a_mu_recur(3, 1, a1=4) == 4
    assert a_mu_recur(1, 7) == 6470
    with pytest.raises(OutOfRange):
        a_mu_recur(1, 0)


def test_bernoulli_euler_identities_report():
    rep = verify_bernoulli_euler_identities(15)
    assert rep.ok
    assert rep.count(DISAGREES, "euler_linear_as_printed") == 15
    assert any("-1" in n for n in rep.notes)
