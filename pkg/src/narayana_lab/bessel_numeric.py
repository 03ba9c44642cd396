"""Floating-point Bessel zeros and partial sums of the Rayleigh function.

This is the numeric counterpart of :func:`narayana_lab.beta_moments.bessel_zeta`:
zeros j_{mu,k} of J_mu are bracketed on a grid and refined by bisection, then
sum_k j_{mu,k}^(-2n) is accumulated with an Euler-Maclaurin tail built on
McMahon's asymptotic expansion of the zeros.
"""
from __future__ import annotations

import math

import numpy as np
from scipy import integrate, special

from .algebra import as_rational
from .errors import BadMu, NoConvergence

__all__ = [
    "bessel_j_series",
    "bessel_j",
    "mcmahon_zero",
    "bessel_zero_numeric",
    "bessel_zeros",
    "bessel_zeta_numeric",
]

SERIES_MAX_X = 8.0
GRID_STEP = math.pi / 8
_MAX_BISECT = 200


def _mu_float(mu) -> float:
    m = mu if isinstance(mu, float) else float(as_rational(mu))
    if m < 0:
        raise BadMu("numeric Bessel routines need mu >= 0")
    return m


def bessel_j_series(mu, x: float) -> float:
    """J_mu(x) by its power series; accurate to ~1e-14 for |x| <= 8, where cancellation is mild."""
    m = float(mu)
    x = float(x)
    if x == 0.0:
        return 1.0 if m == 0 else 0.0
    half = x / 2.0
    term = math.exp(m * math.log(abs(half)) - math.lgamma(m + 1.0))
    if half < 0 and m != int(m):
        raise ValueError("non-integer order at negative argument")
    if half < 0 and int(m) % 2:
        term = -term
    q = -half * half
    terms = [term]
    k = 0
    partial = term
    # stop once past the largest term and the next term is < 1e-20 of the sum
    while True:
        k += 1
        term *= q / (k * (k + m))
        terms.append(term)
        partial += term
        if k * (k + m) > abs(q) and abs(term) < 1e-20 * max(abs(partial), 1e-300):
            break
        if k > 10_000:
            raise NoConvergence("power series did not settle")
    return math.fsum(terms)


def bessel_j(mu, x):
    """J_mu on scalars or arrays: power series for |x| <= 8, scipy.special.jv beyond."""
    m = float(mu)
    arr = np.asarray(x, dtype=float)
    out = special.jv(m, arr)
    small = np.abs(arr) <= SERIES_MAX_X
    if np.any(small):
        out = np.array(out, dtype=float, copy=True)
        flat_x, flat_o, flat_s = arr.reshape(-1), out.reshape(-1), small.reshape(-1)
        for i in np.flatnonzero(flat_s):
            flat_o[i] = bessel_j_series(m, flat_x[i])
        out = flat_o.reshape(arr.shape)
    return float(out) if np.ndim(out) == 0 else out


def mcmahon_zero(mu: float, k):
    """Three-term McMahon estimate of the k-th positive zero of J_mu (k may be real)."""
    beta = (np.asarray(k, dtype=float) + mu / 2.0 - 0.25) * math.pi
    m4 = 4.0 * mu * mu
    e = 8.0 * beta
    return beta - (m4 - 1.0) / e - 4.0 * (m4 - 1.0) * (7.0 * m4 - 31.0) / (3.0 * e ** 3)


def _brackets(mu: float, count: int):
    """First ``count`` sign-change intervals of J_mu on a grid of step pi/8."""
    hi = float(mcmahon_zero(mu, count)) + 2 * math.pi
    while True:
        grid = np.arange(GRID_STEP / 4, hi, GRID_STEP)
        vals = bessel_j(mu, grid)
        idx = np.flatnonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))
        if idx.size >= count:
            idx = idx[:count]
            return grid[idx], grid[idx + 1], vals[idx]
        hi += 4 * math.pi


def bessel_zero_numeric(mu, k: int, tol: float = 1e-12) -> float:
    """k-th positive zero of J_mu by bisection on a sign-change bracket."""
    m = _mu_float(mu)
    if k < 1:
        raise ValueError("zero index must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo_arr, hi_arr, flo_arr = _brackets(m, k)
    lo, hi, flo = float(lo_arr[-1]), float(hi_arr[-1]), float(flo_arr[-1])
    for _ in range(_MAX_BISECT):
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fmid = bessel_j(m, mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    raise NoConvergence(f"bisection stalled at width {hi - lo:g} > tol {tol:g}")


def bessel_zeros(mu, count: int, tol: float = 1e-13) -> np.ndarray:
    """First ``count`` positive zeros of J_mu, bisected simultaneously."""
    m = _mu_float(mu)
    lo, hi, flo = _brackets(m, count)
    lo, hi, flo = lo.copy(), hi.copy(), flo.copy()
    for _ in range(_MAX_BISECT):
        width = hi - lo
        if np.all(width <= tol * np.maximum(1.0, hi)):
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        fmid = bessel_j(m, mid)
        same = np.signbit(fmid) == np.signbit(flo)
        lo = np.where(same, mid, lo)
        flo = np.where(same, fmid, flo)
        hi = np.where(same, hi, mid)
    raise NoConvergence("vectorized bisection did not reach tolerance")


def _tail(mu: float, n: int, start: int) -> float:
    """Euler-Maclaurin estimate of sum_{k >= start} j_{mu,k}^(-2n) from McMahon zeros."""

    def f(t):
        return float(mcmahon_zero(mu, t)) ** (-2 * n)

    integral, _ = integrate.quad(f, start, np.inf, epsabs=1e-16, epsrel=1e-12, limit=200)
    h = 1e-3
    fprime = (f(start + h) - f(start - h)) / (2 * h)
    return integral + f(start) / 2.0 - fprime / 12.0


def bessel_zeta_numeric(mu, n: int, K: int) -> float:
    """sum_{k<=K} j_{mu,k}^(-2n) plus an integral tail estimate for k > K."""
    m = _mu_float(mu)
    if n < 1 or K < 1:
        raise ValueError("need n >= 1 and K >= 1")
    zeros = bessel_zeros(m, K)
    head = math.fsum((zeros ** (-2 * n)).tolist())
    return head + _tail(m, n, K + 1)
