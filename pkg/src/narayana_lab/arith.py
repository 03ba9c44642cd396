"""p-adic valuations, parity theorems and arithmetic experiments on a_n, b_n, a_n(mu)."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import primefactors

from .algebra import as_rational
from .beta_moments import a_mu_closed, a_mu_table
from .errors import NoneFound, ZeroInput
from .reports import AGREES, DISAGREES, INFO, OUT_OF_RANGE, Report
from .sequences import a_table, b_table

__all__ = [
    "nu_p",
    "prime_support",
    "binary_digits",
    "parity_theorems_check",
    "ValuationReport",
    "nu2_pattern_report",
    "nu3_fact_report",
    "PIntegralityResult",
    "p_integrality_search",
    "p_integrality_scan",
    "P_INTEGRALITY_TABLE",
    "logconcavity_report",
    "monotonicity_report",
]

# (mu, a1, p) as tabulated for the p-integrality experiment.
P_INTEGRALITY_TABLE = ((2, 2, 3), (3, 4, 5), (4, 10, 7), (5, 12, 7), (6, 84, 11), (7, 264, 11), (8, 990, 13))


def nu_p(x, p: int) -> int:
    """nu_p(numerator) - nu_p(denominator)."""
    x = as_rational(x)
    if x == 0:
        raise ZeroInput("nu_p(0) is infinite")
    if p < 2:
        raise ValueError("p must be a prime")
    v = 0
    num, den = abs(x.numerator), x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def prime_support(n: int) -> List[int]:
    """Distinct prime factors of |n|, n != 0."""
    n = abs(int(n))
    if n == 0:
        raise ZeroInput("0 has no prime support")
    return [int(q) for q in primefactors(n)]


def binary_digits(n: int) -> str:
    return format(n, "b")


def parity_theorems_check(N: int) -> Report:
    """Four parity statements for a_n and b_n, asserted for every n <= N."""
    if N < 8:
        raise ValueError("N must be >= 8")
    a = a_table(N)
    b = b_table(N)
    special_a = {2 * (2 ** m - 1) for m in range(1, N.bit_length() + 1)}
    mersenne = {2 ** m - 1 for m in range(1, N.bit_length() + 1)}
    powers = {2 ** m for m in range(0, N.bit_length() + 1)}
    rep = Report(f"parity theorems, n <= {N}")
    for n in range(1, N + 1):
        an, bn = int(a[n - 1]), int(b[n - 1])
        rep.add("a_odd_iff_n_is_2(2^m-1)", (an % 2 == 1) == (n in special_a), n=n)
        if n % 2:
            rep.add("a_even_for_odd_n", an % 2 == 0, n=n)
        if n in mersenne:
            rep.add("half_a_odd_for_n_2^m-1", an % 2 == 0 and (an // 2) % 2 == 1, n=n)
        rep.add("b_odd_iff_n_is_2^m", (bn % 2 == 1) == (n in powers), n=n)
    return rep


@dataclass
class ValuationReport:
    p: int
    entries: List[Tuple[int, int]]
    pattern_class: Optional[str] = None
    report: Report = field(default_factory=lambda: Report("", experimental=True))

    def valuation(self, n: int) -> int:
        return self.entries[n - 1][1]

    def to_dict(self) -> Dict:
        return {
            "p": self.p,
            "entries": [[n, v] for n, v in self.entries],
            "pattern_class": self.pattern_class,
            "report": self.report.to_dict(),
        }


def _nu2_patterns(min_repeat: int) -> Dict[int, List[str]]:
    r = "{%d,}" % min_repeat
    return {
        0: [f"1{r}0"],
        1: [f"1{r}", f"10{r}"],
        2: [f"101{r}0"],
    }


def nu2_pattern_report(N: int, min_repeat: int = 1) -> ValuationReport:
    """Compare nu_2(a_n) with the binary-digit patterns for values 0, 1, 2.

    A barred symbol stands for ``min_repeat`` or more copies.  For each clause
    and each n both directions are tabulated: the pattern matches iff the
    valuation equals the clause value.
    """
    if N < 16:
        raise ValueError("N must be >= 16")
    a = a_table(N)
    entries = [(n, nu_p(a[n - 1], 2)) for n in range(1, N + 1)]
    rep = Report(f"nu_2(a_n) binary patterns, n <= {N}", experimental=True)
    patterns = _nu2_patterns(min_repeat)
    for value, pats in patterns.items():
        for n, v in entries:
            digits = binary_digits(n)
            matched = [p for p in pats if re.fullmatch(p, digits)]
            agree = bool(matched) == (v == value)
            rep.add(
                f"nu2_clause_{value}",
                AGREES if agree else DISAGREES,
                n=n,
                digits=digits,
                nu2=v,
                pattern_matched=bool(matched),
            )
    bad = sorted({c.params["n"] for c in rep.checks if c.status == DISAGREES})
    rep.notes.append(f"disagreements at n = {bad[:20]}{' ...' if len(bad) > 20 else ''}")
    if N >= 4:
        rep.notes.append(f"n=4: digits 100, nu_2(a_4) = {entries[3][1]}, pattern for value 1 matches")
    return ValuationReport(2, entries, f"binary, repeats >= {min_repeat}", rep)


def nu3_fact_report(N: int) -> ValuationReport:
    """Tabulate the four nu_3 statements over every parameter whose indices stay <= N."""
    if N < 16:
        raise ValueError("N must be >= 16")
    a = a_table(N)
    entries = [(n, nu_p(a[n - 1], 3)) for n in range(1, N + 1)]
    v = {n: val for n, val in entries}
    w = [3 ** j - 1 for j in range(0, N.bit_length() + 2)]
    special = set(w[1:])
    rep = Report(f"nu_3(a_n) statements, n <= {N}", experimental=True)

    def status(ok):
        return AGREES if ok else DISAGREES

    for n in range(1, N // 3 + 1):
        if n in special:
            rep.add("nu3_equal_triple", OUT_OF_RANGE, n=n)
        else:
            rep.add("nu3_equal_triple", status(v[3 * n - 2] == v[3 * n - 1] == v[3 * n]), n=n,
                    values=[v[3 * n - 2], v[3 * n - 1], v[3 * n]])
    for n in range(1, (N - 2) // 3 + 1):
        j = next((j for j in range(len(w) - 1) if w[j] + 1 <= n <= w[j + 1] - 1), None)
        if j is None:
            rep.add("nu3_shifted", OUT_OF_RANGE, n=n)
        else:
            rep.add("nu3_shifted", status(v[3 * n + 2] == j - nu_p(n + 1, 3)), n=n, j=j,
                    value=v[3 * n + 2], predicted=j - nu_p(n + 1, 3))
    for m, n in enumerate(w):
        if m == 0 or 3 * n > N:
            continue
        after = [v[k] for k in (3 * n + 1, 3 * n + 2) if k <= N]
        rep.add("nu3_zero_at_w_j", status(v[3 * n] == 0), n=n, value=v[3 * n], following=after)
        rep.add("nu3_at_3^m-1", status(v[3 * n] == v[3 * n - 1] - 1 == v[3 * n - 2] - 1 == m), n=n, m=m,
                values=[v[3 * n - 2], v[3 * n - 1], v[3 * n]])
        rep.add("nu3_neighbours_at_3^m-1", status(v[3 * n - 1] == v[3 * n - 2] == m - 1), n=n, m=m,
                detail="partial reading: nu_3(a_{3n-2}) = nu_3(a_{3n-1}) = m - 1")
    rep.notes.append("statements 'nu3_zero_at_w_j' and 'nu3_at_3^m-1' make different claims about the same index 3(3^m-1)")
    return ValuationReport(3, entries, "ternary", rep)


@dataclass(frozen=True)
class PIntegralityResult:
    mu: Fraction
    a1: Fraction
    p: Optional[int]
    checked_to: int
    witness_denominators: tuple


def _single_prime(values: Sequence[Fraction]):
    """(True, p or None) if every denominator is a power of one prime p."""
    primes = set()
    for x in values:
        if x.denominator > 1:
            primes.update(prime_support(x.denominator))
            if len(primes) > 1:
                return False, None
    return True, (primes.pop() if primes else None)


def p_integrality_search(mu, N: int, candidates: Sequence) -> PIntegralityResult:
    """First candidate a1 making a_1(mu..), ..., a_N(mu) p-integral for a single prime p.

    ``p`` is None when all values come out as integers.
    """
    mu = as_rational(mu)
    if not candidates:
        raise ValueError("candidates must be nonempty")
    for a1 in candidates:
        a1 = as_rational(a1)
        if a1 == 0:
            continue
        vals = a_mu_table(mu, N, a1)
        ok, p = _single_prime(vals)
        if ok:
            dens = tuple(sorted({x.denominator for x in vals if x.denominator > 1}))
            return PIntegralityResult(mu, a1, p, N, dens)
    raise NoneFound(f"no candidate gives a p-integral sequence for mu={mu} up to n={N}")


def p_integrality_scan(mu, N: int, a1_max: int) -> List[PIntegralityResult]:
    """Every positive integer a1 <= a1_max whose sequence is p-integral up to N."""
    out = []
    for a1 in range(1, a1_max + 1):
        try:
            out.append(p_integrality_search(mu, N, [a1]))
        except NoneFound:
            pass
    return out


def logconcavity_report(seq: Sequence, as_written: bool = True, name: str = "x") -> Report:
    """Check x_{n+1} x_{n-1} >= x_n^2 (as_written) or x_n^2 >= x_{n+1} x_{n-1} at each interior n (1-based)."""
    xs = [as_rational(v) for v in seq]
    if len(xs) < 3:
        raise ValueError("need at least three terms")
    label = "x[n+1]*x[n-1] >= x[n]^2" if as_written else "x[n]^2 >= x[n+1]*x[n-1]"
    rep = Report(f"{name}: {label}", experimental=True)
    for n in range(2, len(xs)):
        lo, mid, hi = xs[n - 2], xs[n - 1], xs[n]
        ok = hi * lo >= mid * mid if as_written else mid * mid >= hi * lo
        rep.add("as_written" if as_written else "conventional", AGREES if ok else DISAGREES, n=n)
    holds = rep.count(AGREES)
    total = len(rep.checks)
    fails = [c.params["n"] for c in rep.checks if c.status == DISAGREES]
    rep.notes.append(f"holds at {holds} of {total} interior indices; fails at n = {fails[:20]}")
    orientation = "displayed inequality x[n+1]x[n-1] >= x[n]^2 is log-convexity; log-concavity is the reverse"
    rep.add("orientation", INFO, detail=orientation)
    rep.notes.append(orientation)
    return rep


def monotonicity_report(mu, n_max: int) -> Report:
    """Positivity and growth of a_n(mu) for n <= n_max.

    ``increasing_as_stated`` asserts a_{n+1} > a_n for every n >= floor((mu+3)/2).
    ``increasing_from_bound`` asserts a_n > a_{n-1} for n >= max(3, floor((mu+3)/2) + 1),
    the range in which a_n >= 2(n-1)/(mu+1) a_{n-1} (also checked) forces growth.
    """
    mu = as_rational(mu)
    a = a_mu_table(mu, n_max)
    closed = [a_mu_closed(mu, n) for n in range(1, n_max + 1)]
    n0 = int((mu + 3) // 2)
    rep = Report(f"monotonicity of a_n({mu}), n <= {n_max}")
    for n in range(1, n_max + 1):
        rep.add("closed_equals_recurrence", closed[n - 1] == a[n - 1], n=n)
        rep.add("positive", closed[n - 1] > 0, n=n)
    for n in range(max(n0, 1), n_max):
        rep.add("increasing_as_stated", a[n] > a[n - 1], n=n + 1, start=n0)
    for n in range(max(3, n0 + 1), n_max + 1):
        rep.add("increasing_from_bound", a[n - 1] > a[n - 2], n=n)
    for n in range(3, n_max + 1):
        rep.add("lower_bound", a[n - 1] >= 2 * (n - 1) / (mu + 1) * a[n - 2], n=n)
    return rep
