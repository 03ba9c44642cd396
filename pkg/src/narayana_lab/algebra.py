"""Exact scalars, dense polynomials and truncated power series.

Every scalar in the package is a :class:`fractions.Fraction`; ``Rational`` is
just an alias. Polynomials and series are immutable value objects.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .errors import DivByNonUnit, ExpNonzeroConstant, LogNonUnitConstant

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "factorial",
    "comb",
    "binomial",
    "pochhammer",
    "Poly",
    "Series",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if any(c in s for c in ".eE"):
            raise ValueError(f"refusing non-exact rational literal {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@lru_cache(maxsize=4096)
def factorial(n: int) -> int:
    return math.factorial(n)


@lru_cache(maxsize=65536)
def comb(n: int, k: int) -> int:
    """Integer binomial coefficient, zero when k < 0 or k > n (n >= 0)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def binomial(x, k: int) -> Fraction:
    """Generalized binomial x(x-1)...(x-k+1)/k! for rational x."""
    if k < 0:
        raise ValueError("binomial requires k >= 0")
    x = as_rational(x)
    if x.denominator == 1 and x >= 0:
        return Fraction(comb(int(x), k))
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / factorial(k)


def pochhammer(x, n: int) -> Fraction:
    """Rising factorial (x)_n = x(x+1)...(x+n-1)."""
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    x = as_rational(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def _strip(coeffs: Iterable) -> tuple:
    c = [as_rational(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``z**k``."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def z(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _lift(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = as_rational(other)
            return Poly(a * c for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def compose_linear(self, alpha, beta) -> "Poly":
        """Return p(alpha*z + beta)."""
        lin = Poly((beta, alpha))
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def reverse(self, d: int) -> "Poly":
        """z**d * p(1/z); requires d >= degree."""
        if d < self.degree:
            raise ValueError("reverse degree smaller than polynomial degree")
        padded = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return Poly(reversed(padded))

    def homogenize(self, num: "Poly", den: "Poly", n: int) -> "Poly":
        """den**n * p(num/den) for n >= degree, with no division performed."""
        if n < self.degree:
            raise ValueError("homogenizing degree smaller than polynomial degree")
        acc = Poly()
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + (num ** k) * (den ** (n - k)) * c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class Series:
    """Power series truncated at ``order`` (inclusive); len(coeffs) == order + 1.

    Binary operations on series of different orders truncate to the smaller one.
    """

    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be >= 0")
        c = [as_rational(v) for v in self.coeffs][: self.order + 1]
        c += [Fraction(0)] * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_function(cls, f, order: int, start: int = 0) -> "Series":
        """Series with coefficient f(k) for start <= k <= order, zero below."""
        return cls([0] * start + [f(k) for k in range(start, order + 1)], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls((0, 1), order)

    @classmethod
    def const(cls, c, order: int) -> "Series":
        return cls((c,), order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, min(order, self.order))

    def _pair(self, other):
        if not isinstance(other, Series):
            other = Series.const(other, self.order)
        m = min(self.order, other.order)
        return self.coeffs[: m + 1], other.coeffs[: m + 1], m

    def __add__(self, other) -> "Series":
        a, b, m = self._pair(other)
        return Series([x + y for x, y in zip(a, b)], m)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "Series":
        a, b, m = self._pair(other)
        return Series([x - y for x, y in zip(a, b)], m)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            c = as_rational(other)
            return Series([v * c for v in self.coeffs], self.order)
        a, b, m = self._pair(other)
        out = [Fraction(0)] * (m + 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j in range(m + 1 - i):
                out[i + j] += x * b[j]
        return Series(out, m)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series":
        if not isinstance(other, Series):
            return self * (1 / as_rational(other))
        a, b, m = self._pair(other)
        if b[0] == 0:
            raise DivByNonUnit("divisor has zero constant term")
        inv0 = 1 / b[0]
        q = [Fraction(0)] * (m + 1)
        for n in range(m + 1):
            s = a[n] - sum((q[k] * b[n - k] for k in range(n)), Fraction(0))
            q[n] = s * inv0
        return Series(q, m)

    def derivative(self) -> "Series":
        """Term-wise derivative; the result has order one less (floored at 0)."""
        if self.order == 0:
            return Series((0,), 0)
        return Series([k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1)

    def integral(self) -> "Series":
        """Antiderivative with zero constant term, order one more."""
        return Series([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.order + 1)

    def exp(self) -> "Series":
        if self.coeffs[0] != 0:
            raise ExpNonzeroConstant("exp needs a zero constant term")
        f, m = self.coeffs, self.order
        g = [Fraction(1)] + [Fraction(0)] * m
        for n in range(1, m + 1):
            g[n] = sum((k * f[k] * g[n - k] for k in range(1, n + 1)), Fraction(0)) / n
        return Series(g, m)

    def log(self) -> "Series":
        if self.coeffs[0] != 1:
            raise LogNonUnitConstant("log needs constant term 1")
        g, m = self.coeffs, self.order
        f = [Fraction(0)] * (m + 1)
        for n in range(1, m + 1):
            f[n] = g[n] - sum((k * f[k] * g[n - k] for k in range(1, n)), Fraction(0)) / n
        return Series(f, m)

    def power(self, alpha) -> "Series":
        """self**alpha for rational alpha, constant term must be 1."""
        return (self.log() * as_rational(alpha)).exp()

    def subs_power(self, e: int) -> "Series":
        """Substitute x -> x**e, keeping the same truncation order."""
        out = [Fraction(0)] * (self.order + 1)
        for k, c in enumerate(self.coeffs):
            if k * e > self.order:
                break
            out[k * e] = c
        return Series(out, self.order)

    def shift_down(self, s: int) -> "Series":
        """Divide by x**s; the lowest s coefficients must vanish."""
        if any(self.coeffs[:s]):
            raise ValueError("series is not divisible by x**%d" % s)
        return Series(self.coeffs[s:], self.order - s)

    def to_poly(self) -> Poly:
        return Poly(self.coeffs)


def poly_from_sum(terms: Sequence[Poly]) -> Poly:
    acc = Poly()
    for t in terms:
        acc = acc + t
    return acc
