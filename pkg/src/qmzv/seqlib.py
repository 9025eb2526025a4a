"""Special sequences: complete Bell polynomials, the five-route sequence
transform pair (multinomial sum / Toeplitz-Hessenberg determinants /
convolution recurrences), harmonic and hyperharmonic numbers, degenerate
Bernoulli numbers, and higher-order Bernoulli / Norlund numbers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactnum import TruncSeries, UniPoly, det_hessenberg, series_exp, series_inv
from .util import fractionize


class InsufficientInput(ValueError):
    pass


class UnsupportedLambda(ValueError):
    pass


def _partition_multiplicities(n: int):
    """Yield the partitions of n as lists of (part, multiplicity) pairs."""

    def rec(remaining, max_part):
        if remaining == 0:
            yield []
            return
        for j in range(min(remaining, max_part), 0, -1):
            for mult in range(remaining // j, 0, -1):
                for rest in rec(remaining - j * mult, j - 1):
                    yield [(j, mult)] + rest

    yield from rec(n, n)


def bell_complete(n: int, xs: Sequence):
    """Complete exponential Bell polynomial Y_n(x_1, ..., x_n), Y_0 = 1.

    Production path: the binomial convolution
    Y_{t+1} = sum_k C(t, k) Y_{t-k} x_{k+1}.
    """
    if len(xs) < n:
        raise InsufficientInput(f"need {n} inputs, got {len(xs)}")
    xs = [fractionize(x) for x in xs]
    ys = [Fraction(1)]
    for t in range(n):
        acc = 0
        for k in range(t + 1):
            acc = acc + math.comb(t, k) * (ys[t - k] * xs[k])
        ys.append(acc)
    return ys[n]


def bell_partition_sum(n: int, xs: Sequence):
    """Y_n evaluated literally as the sum over partitions of n.

    Oracle path (factorial cost); each partition with multiplicities
    (i_1, i_2, ...) contributes n!/(prod i_j!) * prod (x_j / j!)^(i_j).
    """
    if len(xs) < n:
        raise InsufficientInput(f"need {n} inputs, got {len(xs)}")
    if n == 0:
        return Fraction(1)
    xs = [fractionize(x) for x in xs]
    total = 0
    for partition in _partition_multiplicities(n):
        coeff = Fraction(math.factorial(n))
        term = 1
        for part, mult in partition:
            coeff /= math.factorial(mult) * math.factorial(part) ** mult
            term = term * xs[part - 1] ** mult
        total = total + coeff * term
    return total


def elem_from_power_sums(g: Sequence, big_k: int):
    """K-th elementary symmetric value from power sums g_1, g_2, ...

    Equals (1/K!) Y_K(g_1, -1! g_2, 2! g_3, -3! g_4, ...).
    """
    if big_k == 0:
        return Fraction(1)
    if len(g) < big_k:
        raise InsufficientInput(f"need {big_k} power sums, got {len(g)}")
    xs = [
        (-1) ** j * math.factorial(j) * fractionize(g[j])
        for j in range(big_k)
    ]
    return bell_complete(big_k, xs) / Fraction(math.factorial(big_k))


_FORWARD_ROUTES = ("recurrence", "determinant", "partition")
_INVERSE_ROUTES = ("recurrence", "determinant")


def _forward_matrix(a, m):
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if j <= i:
                row.append(a[i - j])
            elif j == i + 1:
                row.append(Fraction(i + 1))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return rows


def _inverse_matrix(b, n):
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j == 0:
                row.append((i + 1) * b[i])
            elif j <= i:
                row.append(b[i - j])
            elif j == i + 1:
                row.append(Fraction(1))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return rows


def seq_transform_forward(a: Sequence, m: int, route: str = "recurrence"):
    """b_m from a_1..a_m (both sequences implicitly start with index 0 = 1).

    The pair (a, b) is linked Newton-style: m b_m = sum_i (-1)^(i-1) a_i
    b_{m-i}.  Routes: "recurrence" (that convolution), "determinant" (the
    (1/m!)-scaled Toeplitz-Hessenberg determinant with superdiagonal
    1..m-1), "partition" (the multinomial sum over partitions of m with
    factors ((-1)^(j-1) a_j / j)^(i_j)).
    """
    if len(a) < m:
        raise InsufficientInput(f"need {m} terms, got {len(a)}")
    if route not in _FORWARD_ROUTES:
        raise ValueError(f"unknown route {route!r}")
    a = [fractionize(x) for x in a]
    if m == 0:
        return Fraction(1)
    if route == "determinant":
        det = det_hessenberg(_forward_matrix(a, m))
        return det / Fraction(math.factorial(m))
    if route == "partition":
        total = 0
        for partition in _partition_multiplicities(m):
            coeff = Fraction(1)
            term = 1
            for part, mult in partition:
                coeff /= math.factorial(mult)
                base = a[part - 1] * Fraction((-1) ** (part - 1), part)
                term = term * base ** mult
            total = total + coeff * term
        return total
    bs = [Fraction(1)]
    for t in range(1, m + 1):
        acc = 0
        for i in range(1, t + 1):
            term = a[i - 1] * bs[t - i]
            acc = acc + (term if i % 2 == 1 else -term)
        bs.append(acc / t)
    return bs[m]


def seq_transform_inverse(b: Sequence, n: int, route: str = "recurrence"):
    """a_n recovered from b_1..b_n; inverse of :func:`seq_transform_forward`.

    Routes: "determinant" (first column j*b_j, unit superdiagonal) and
    "recurrence" (a_n = sum_{j<n} (-1)^(j-1) b_j a_{n-j} + (-1)^(n+1) n b_n).
    """
    if len(b) < n:
        raise InsufficientInput(f"need {n} terms, got {len(b)}")
    if route not in _INVERSE_ROUTES:
        raise ValueError(f"unknown route {route!r}")
    b = [fractionize(x) for x in b]
    if n == 0:
        return Fraction(1)
    if route == "determinant":
        return det_hessenberg(_inverse_matrix(b, n))
    res = [Fraction(1)]
    for t in range(1, n + 1):
        acc = 0
        for j in range(1, t):
            term = b[j - 1] * res[t - j]
            acc = acc + (term if j % 2 == 1 else -term)
        tail = t * b[t - 1]
        acc = acc + (tail if (t + 1) % 2 == 0 else -tail)
        res.append(acc)
    return res[n]


@lru_cache(maxsize=None)
def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n."""
    if n < 1:
        raise ValueError("need n >= 1")
    return (harmonic(n - 1) if n > 1 else Fraction(0)) + Fraction(1, n)


@lru_cache(maxsize=None)
def hyperharmonic(n: int, k: int) -> Fraction:
    """h_n^(k): iterated partial sums of harmonic numbers, h_n^(1) = H_n."""
    if n < 1 or k < 1:
        raise ValueError("need n, k >= 1")
    if k == 1:
        return harmonic(n)
    return sum(hyperharmonic(i, k - 1) for i in range(1, n + 1))


def degen_bernoulli(k: int, lam) -> Fraction:
    """Degenerate Bernoulli number beta_k at lambda = 1/m for integer m >= 1.

    Uses the exact binomial expansion of (1 + t/m)^m, so no symbolic limit
    is involved; other lambdas raise UnsupportedLambda (use
    :func:`degen_bernoulli_poly` and evaluate instead).
    """
    lam = Fraction(lam)
    if lam.numerator != 1 or lam.denominator < 1:
        raise UnsupportedLambda(f"lambda must be 1/m with integer m >= 1, got {lam}")
    m = lam.denominator
    g = TruncSeries(
        k + 1,
        [Fraction(math.comb(m, j + 1), m ** (j + 1)) for j in range(k + 1)],
    )
    beta = series_inv(g)
    return beta.coeffs[k] * math.factorial(k)


@lru_cache(maxsize=None)
def degen_bernoulli_poly(k: int) -> UniPoly:
    """beta_k as a polynomial in lambda.

    Expands (1 + lambda*t)^(1/lambda) = exp(log(1 + lambda*t)/lambda) as a
    series whose t-coefficients are polynomials in lambda, then inverts
    ((1+lambda t)^(1/lambda) - 1)/t.
    """
    if k < 0:
        raise ValueError("need k >= 0")
    order = k + 2
    log_coeffs = [UniPoly()]
    for j in range(1, order):
        log_coeffs.append(UniPoly([0] * (j - 1) + [Fraction((-1) ** (j - 1), j)]))
    e = series_exp(TruncSeries(order, log_coeffs))
    g = TruncSeries(k + 1, list(e.coeffs[1:]))
    beta = series_inv(g)
    c = beta.coeffs[k] * math.factorial(k)
    return c if isinstance(c, UniPoly) else UniPoly((Fraction(c),))


@lru_cache(maxsize=None)
def bernoulli_order(n: int, alpha: int) -> Fraction:
    """Higher-order Bernoulli number: n! times the t^n coefficient of
    (t/(e^t - 1))^alpha."""
    if n < 0 or alpha < 0:
        raise ValueError("need n, alpha >= 0")
    h = TruncSeries(n + 1, [Fraction(1, math.factorial(j + 1)) for j in range(n + 1)])
    p = series_inv(h) ** alpha
    return p.coeffs[n] * math.factorial(n)


@lru_cache(maxsize=None)
def norlund(n: int) -> Fraction:
    """Norlund number: n! times the t^n coefficient of t/((1+t) log(1+t))."""
    if n < 0:
        raise ValueError("need n >= 0")
    g = []
    for j in range(n + 1):
        c = Fraction((-1) ** j, j + 1)
        if j >= 1:
            c += Fraction((-1) ** (j - 1), j)
        g.append(c)
    inv = series_inv(TruncSeries(n + 1, g))
    return inv.coeffs[n] * math.factorial(n)
