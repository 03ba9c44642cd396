from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from narayana_lab.hessenberg import (
    HessMatrix,
    a_via_det,
    alpha_via_unrolled_recurrence,
    b_via_det,
    build_B,
    build_M,
    hessenberg_det,
    hessenberg_minors,
)
from narayana_lab.sequences import Route, a_table, b_table


def leibniz_det(rows):
    """Determinant by the permutation expansion; exact and independent."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i, j in enumerate(perm):
            prod *= rows[i][j]
            if prod == 0:
                break
        total += -prod if inv % 2 else prod
    return total


@st.composite
def hessenberg_matrices(draw):
    n = draw(st.integers(1, 7))
    vals = st.fractions(min_value=-9, max_value=9, max_denominator=5)
    rows = [[draw(vals) if j <= i + 1 else 0 for j in range(n)] for i in range(n)]
    return HessMatrix(n, rows)


@settings(max_examples=60, deadline=None)
@given(hessenberg_matrices())
def test_det_matches_leibniz(H):
    assert hessenberg_det(H) == leibniz_det(H.to_lists())


@settings(max_examples=30, deadline=None)
@given(hessenberg_matrices())
def test_minors_are_leading_block_dets(H):
    minors = hessenberg_minors(H)
    for m in range(1, H.n + 1):
        assert minors[m] == leibniz_det(H.leading(m).to_lists())


def test_zero_superdiagonal_is_handled():
    H = HessMatrix(3, [[1, 0, 0], [2, 3, 0], [4, 5, 6]])
    assert hessenberg_det(H) == 18


def test_rejects_entries_above_superdiagonal():
    with pytest.raises(ValueError):
        HessMatrix(3, [[1, 1, 1], [1, 1, 1], [1, 1, 1]])
    with pytest.raises(ValueError):
        HessMatrix(2, [[1, 1]])


def test_B_structure():
    B = build_B(4)
    assert [B.entry(i, 1) for i in range(1, 5)] == [2, 4, 6, 8]
    assert B.entry(1, 2) == 1 and B.entry(2, 2) == 3 and B.entry(2, 3) == 2
    assert B.superdiag == tuple(B.entry(i, i + 1) for i in range(1, 4))


def test_M_structure():
    M = build_M(3)
    assert M.to_lists() == [[1, 1, 0], [1, 2, 1], [1, 3, 6]]


def test_a_via_det_small():
    assert [a_via_det(n).value for n in range(1, 8)] == [2, 1, 2, 8, 52, 495, 6470]
    assert a_via_det(3).route is Route.Determinant


@pytest.mark.parametrize("n", [1, 5, 12, 25, 40])
def test_det_routes_match_recurrences(n):
    assert a_via_det(n).value == a_table(n)[-1]
    assert b_via_det(n).value == b_table(n)[-1]


def test_det_B_over_factorial_exact_division():
    for n in range(1, 30):
        d = hessenberg_det(build_B(n))
        assert d % factorial(n) == 0


def test_alpha_recurrence():
    alpha = alpha_via_unrolled_recurrence(40)
    assert alpha[0] == 2
    assert alpha == a_table(40)
