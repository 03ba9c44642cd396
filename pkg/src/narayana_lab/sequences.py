"""Recurrence routes for A_n, a_n = 2 A_n / C_n and b_n.

Each route keeps its own history so that routes can be checked against each
other; nothing here uses a closed form.  The quadratic recurrence is seeded
with a_1 = 2, the value forced by a_2 = 1 (4 a_2 = a_1**2).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from ._tables import GrowingTable
from .algebra import comb
from .errors import OutOfRange, UndefinedForN1

__all__ = [
    "Route",
    "SeqValue",
    "catalan",
    "narayana_number",
    "sigma",
    "seq_A",
    "seq_a_def",
    "seq_a_quad",
    "seq_a_sym",
    "seq_b",
    "mixed_b_a_check",
    "a_table",
    "b_table",
    "A_table",
]


class Route(enum.Enum):
    DefRecurrence = "def"
    QuadraticRecurrence = "quad"
    SymmetricRecurrence = "sym"
    Determinant = "det"
    ZetaClosedForm = "closed"
    BernoulliClosedForm = "bernoulli"
    EulerClosedForm = "euler"


@dataclass(frozen=True)
class SeqValue:
    index: int
    value: Fraction
    route: Route

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


def _check_positive(n: int) -> None:
    if n < 1:
        raise OutOfRange(f"index must be >= 1, got {n}")


def catalan(n: int) -> Fraction:
    if n < 0:
        raise OutOfRange("catalan index must be >= 0")
    return Fraction(comb(2 * n, n), n + 1)


def narayana_number(r: int, k: int) -> Fraction:
    """N(r, k) = binom(r, k-1) binom(r, k) / r for 1 <= k <= r."""
    if r < 1 or not 1 <= k <= r:
        raise OutOfRange(f"N({r}, {k}) needs 1 <= k <= r")
    return Fraction(comb(r, k - 1) * comb(r, k), r)


def _sigma_int(n: int, r: int) -> int:
    q, rem = divmod(2 * comb(n, r - 1) * comb(n + 1, r + 1), n)
    assert rem == 0
    return q


def sigma(n: int, r: int) -> Fraction:
    """sigma_{n,r} = (2/n) binom(n, r-1) binom(n+1, r+1)."""
    if n < 1 or not 1 <= r <= n:
        raise OutOfRange(f"sigma({n}, {r}) needs 1 <= r <= n")
    return Fraction(2 * comb(n, r - 1) * comb(n + 1, r + 1), n)


# --- route tables (plain ints internally) ---------------------------------

def _step_A(vals: List[int], n: int) -> int:
    s = int(catalan(n))
    for j in range(1, n):
        term = comb(2 * n - 1, 2 * j - 1) * vals[j - 1] * int(catalan(n - j))
        s += -term if j % 2 else term
    return s if n % 2 else -s


def _step_a_def(vals: List[int], n: int) -> int:
    s = 0
    for j in range(1, n):
        term = _sigma_int(n, j) * vals[j - 1]
        s += -term if j % 2 else term
    half, rem = divmod(s, 2)
    assert rem == 0, "half-sum in the defining relation must be integral"
    out = 2 + half
    return out if n % 2 else -out


def _step_a_quad(vals: List[int], n: int) -> int:
    s = sum(comb(n, k - 1) * comb(n, k + 1) * vals[k - 1] * vals[n - k - 1] for k in range(1, n))
    q, rem = divmod(s, 2 * n)
    assert rem == 0
    return q


def _step_a_sym(vals: List[int], n: int) -> int:
    s = 0
    for k in range(1, n):
        prod = vals[k - 1] * vals[n - k - 1]
        s += comb(n - 1, k - 1) * comb(n - 1, k) * prod
        s -= comb(n - 1, k - 2) * comb(n - 1, k + 1) * prod
    q, rem = divmod(s, 4)
    assert rem == 0
    return q


def _step_b(vals: List[int], n: int) -> int:
    return sum(comb(n - 1, k) * comb(n - 1, k - 1) * vals[k - 1] * vals[n - k - 1] for k in range(1, n))


_A = GrowingTable([1], _step_A)
_A_DEF = GrowingTable([2], _step_a_def)
_A_QUAD = GrowingTable([2], _step_a_quad)
_A_SYM = GrowingTable([2], _step_a_sym)
_B = GrowingTable([1], _step_b)

_A_ROUTES = {
    Route.DefRecurrence: _A_DEF,
    Route.QuadraticRecurrence: _A_QUAD,
    Route.SymmetricRecurrence: _A_SYM,
}


def seq_A(n: int) -> SeqValue:
    """Lasalle number A_n from the alternating Catalan convolution."""
    _check_positive(n)
    return SeqValue(n, Fraction(_A[n]), Route.DefRecurrence)


def seq_a_def(n: int) -> SeqValue:
    _check_positive(n)
    return SeqValue(n, Fraction(_A_DEF[n]), Route.DefRecurrence)


def seq_a_quad(n: int) -> SeqValue:
    """a_n from 2n a_n = sum binom(n,k-1) binom(n,k+1) a_k a_{n-k}, a_1 = 2.

    The recurrence is homogeneous, so the seed a_1 = 1 (sometimes quoted for
    it) would give a_n / 2^n instead: 1, 1/4, 1/4, 1/2, ...
    """
    _check_positive(n)
    return SeqValue(n, Fraction(_A_QUAD[n]), Route.QuadraticRecurrence)


def seq_a_sym(n: int) -> SeqValue:
    if n == 1:
        raise UndefinedForN1("the symmetric recurrence starts at n = 2 (a_1 = 2 is its seed)")
    _check_positive(n)
    return SeqValue(n, Fraction(_A_SYM[n]), Route.SymmetricRecurrence)


def seq_b(n: int) -> SeqValue:
    _check_positive(n)
    return SeqValue(n, Fraction(_B[n]), Route.DefRecurrence)


def a_table(n_max: int, route: Route = Route.DefRecurrence) -> List[Fraction]:
    """a_1..a_{n_max} by one of the recurrence routes."""
    return [Fraction(v) for v in _A_ROUTES[Route(route)].upto(n_max)]


def A_table(n_max: int) -> List[Fraction]:
    return [Fraction(v) for v in _A.upto(n_max)]


def b_table(n_max: int) -> List[Fraction]:
    return [Fraction(v) for v in _B.upto(n_max)]


def mixed_b_a_check(
    n: int,
    a_values: Optional[Sequence] = None,
    b_values: Optional[Sequence] = None,
) -> bool:
    """Check b_n = 1/2 sum_{j<n} binom(n-1,j) binom(n,j-1) b_j a_{n-j}.

    ``a_values``/``b_values`` (1-based lists, index 0 holds term 1) override the
    computed tables; used for negative controls.
    """
    if n < 2:
        raise OutOfRange("mixed relation needs n >= 2")
    a = list(a_values) if a_values is not None else a_table(n)
    b = list(b_values) if b_values is not None else b_table(n)
    rhs = Fraction(sum(comb(n - 1, j) * comb(n, j - 1) * b[j - 1] * a[n - j - 1] for j in range(1, n))) / 2
    return rhs == b[n - 1]
