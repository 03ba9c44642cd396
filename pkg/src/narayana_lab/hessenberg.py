"""Upper Hessenberg matrices B_n, M_n and their determinants.

Determinants are evaluated only by the first-column expansion

    det H_n = sum_{r=1}^{n} (-1)^(n-r) h[n,r] det H_{r-1} prod_{i=r}^{n-1} h[i,i+1],

with det H_0 = 1, which keeps everything exact and O(n^2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List

from .algebra import as_rational, comb, factorial
from .sequences import Route, SeqValue

__all__ = [
    "HessMatrix",
    "build_B",
    "build_M",
    "hessenberg_det",
    "hessenberg_minors",
    "a_via_det",
    "b_via_det",
    "alpha_via_unrolled_recurrence",
]


@dataclass(frozen=True)
class HessMatrix:
    """n x n upper Hessenberg matrix with 1-based ``entry(i, j)`` access."""

    n: int
    rows: tuple
    superdiag: tuple = field(init=False)

    def __post_init__(self):
        rows = tuple(tuple(as_rational(v) for v in row) for row in self.rows)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError("rows do not form an n x n table")
        for i, row in enumerate(rows, start=1):
            for j in range(i + 2, self.n + 1):
                if row[j - 1] != 0:
                    raise ValueError(f"entry ({i},{j}) above the first superdiagonal is nonzero")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "superdiag", tuple(rows[i - 1][i] for i in range(1, self.n)))

    @classmethod
    def from_function(cls, n: int, entry: Callable[[int, int], object]) -> "HessMatrix":
        rows = [[entry(i, j) if j <= i + 1 else 0 for j in range(1, n + 1)] for i in range(1, n + 1)]
        return cls(n, rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i - 1][j - 1]

    def leading(self, m: int) -> "HessMatrix":
        """Leading principal m x m block."""
        return HessMatrix(m, [row[:m] for row in self.rows[:m]])

    def to_lists(self) -> List[List[Fraction]]:
        return [list(r) for r in self.rows]


def build_B(n: int) -> HessMatrix:
    """B_n: first column 2i, then binom(i, j-2) binom(i+1, j)."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def entry(i, j):
        if j == 1:
            return 2 * i
        return comb(i, j - 2) * comb(i + 1, j)

    return HessMatrix.from_function(n, entry)


def build_M(n: int) -> HessMatrix:
    """M_n: first column ones, then binom(i, j-1) binom(i-1, j-2)."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def entry(i, j):
        if j == 1:
            return 1
        return comb(i, j - 1) * comb(i - 1, j - 2)

    return HessMatrix.from_function(n, entry)


def hessenberg_minors(H: HessMatrix) -> List[Fraction]:
    """[det H_0, det H_1, ..., det H_n] for the leading principal blocks."""
    dets = [Fraction(1)]
    for m in range(1, H.n + 1):
        total = Fraction(0)
        tail = Fraction(1)  # prod_{i=r}^{m-1} h[i,i+1], grown as r decreases
        for r in range(m, 0, -1):
            if r < m:
                tail *= H.superdiag[r - 1]
                if tail == 0:
                    break
            term = H.entry(m, r) * dets[r - 1] * tail
            total += term if (m - r) % 2 == 0 else -term
        dets.append(total)
    return dets


def hessenberg_det(H: HessMatrix) -> Fraction:
    return hessenberg_minors(H)[-1]


def a_via_det(n: int) -> SeqValue:
    """a_n = det(B_n) / n!."""
    return SeqValue(n, hessenberg_det(build_B(n)) / factorial(n), Route.Determinant)


def b_via_det(n: int) -> SeqValue:
    return SeqValue(n, hessenberg_det(build_M(n)), Route.Determinant)


def alpha_via_unrolled_recurrence(n_max: int) -> List[Fraction]:
    """alpha_n from the recurrence obtained by expanding det B_n along its last row.

    (-1)^(n-1) alpha_n = 2 + sum_{j<n} (-1)^j binom(n-1,j-1) binom(n+1,j+1) alpha_j / (n-j+1)
    """
    alpha: List[Fraction] = []
    for n in range(1, n_max + 1):
        s = Fraction(2)
        for j in range(1, n):
            term = Fraction(comb(n - 1, j - 1) * comb(n + 1, j + 1)) * alpha[j - 1] / (n - j + 1)
            s += -term if j % 2 else term
        alpha.append(s if n % 2 else -s)
    return alpha
