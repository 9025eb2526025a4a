"""q-numbers, q-factorials, and the two-kind generalized Stirling triangles.

Both triangles carry a level ``s >= 1`` and an offset ``r >= 1`` and are
generic over the evaluation point q, which can be

* symbolic (entries are integer polynomials in q),
* an exact rational (entries are Fractions; q = 1 is fine because the
  q-number [i]_q is computed as the sum 1 + q + ... + q^(i-1), never as a
  quotient), or
* a primitive n-th root of unity (entries are cyclotomic field elements).

Boundary conventions used throughout: entries vanish for k > n and for
k < r off the diagonal, and every diagonal entry is 1.  With these the
signed first-kind matrix and the second-kind matrix are mutually inverse on
the full index range, row r of the first kind is the unit vector (matching
the base product x^r), and the recurrences reproduce the expansion
coefficients of the generalized factorials for every n >= r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloCtx, cyclo_ctx
from .exactnum import UniPoly
from .util import CheckResult


class BadParams(ValueError):
    pass


class QPoint:
    """Tagged evaluation point; factory for ring elements at that point."""

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def qnum(self, i: int):
        """The q-number [i]_q = 1 + q + ... + q^(i-1) in the target ring."""
        raise NotImplementedError


@dataclass(frozen=True)
class SymbolicQ(QPoint):
    """Work over the polynomial ring Z[q]."""

    def zero(self):
        return UniPoly()

    def one(self):
        return UniPoly((1,))

    def qnum(self, i: int):
        return UniPoly((1,) * i)


@dataclass(frozen=True)
class RationalQ(QPoint):
    """Evaluate at an exact rational q."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def qnum(self, i: int):
        acc = Fraction(0)
        for _ in range(i):
            acc = acc * self.value + 1
        return acc


@dataclass(frozen=True)
class RootOfUnityQ(QPoint):
    """Evaluate at q = zeta_n, a primitive n-th root of unity."""

    n: int

    @property
    def ctx(self) -> CycloCtx:
        return cyclo_ctx(self.n)

    def zero(self):
        return self.ctx.zero()

    def one(self):
        return self.ctx.one()

    def qnum(self, i: int):
        z = self.ctx.zeta()
        acc = self.ctx.zero()
        for _ in range(i):
            acc = acc * z + 1
        return acc


def qnum(i: int, q: QPoint):
    if i < 0:
        raise BadParams("q-number index must be >= 0")
    return q.qnum(i)


def qfact(i: int, q: QPoint):
    """q-factorial [i]_q! with [0]_q! = 1."""
    if i < 0:
        raise BadParams("q-factorial index must be >= 0")
    acc = q.one()
    for j in range(1, i + 1):
        acc = acc * q.qnum(j)
    return acc


def falling_product(n: int, r: int, s: int, q: QPoint) -> UniPoly:
    """The generalized factorial x^r * prod_{i=r..n-1} (x - ([i]_q)^s).

    Returns a polynomial in x whose coefficients live in the ring selected
    by q; the base case n = r gives x^r.
    """
    if r < 1 or s < 1:
        raise BadParams("need r >= 1 and s >= 1")
    if n < r:
        raise BadParams("need n >= r")
    one = q.one()
    poly = UniPoly([0] * r + [one])
    for i in range(r, n):
        poly = poly * UniPoly((-(q.qnum(i) ** s), one))
    return poly


class StirlingTable:
    """Memoized triangle of one kind of generalized q-Stirling numbers.

    Growth is idempotent (every fill recomputes the same immutable value),
    so concurrent readers are safe under the usual dict-atomicity rules.
    """

    def __init__(self, kind: str, r: int, s: int, q: QPoint):
        if kind not in ("first", "second"):
            raise BadParams(f"unknown kind {kind!r}")
        if r < 1 or s < 1:
            raise BadParams("need r >= 1 and s >= 1")
        self.kind = kind
        self.r = r
        self.s = s
        self.q = q
        self._memo = {}
        self._weights = {}

    def weight(self, i: int):
        """([i]_q)^s, the recurrence multiplier."""
        w = self._weights.get(i)
        if w is None:
            w = self._weights[i] = self.q.qnum(i) ** self.s
        return w

    def entry(self, n: int, k: int):
        if k < 0 or n < 0 or k > n:
            return 0
        if n == k:
            return self.q.one()
        if k < self.r:
            return 0
        key = (n, k)
        val = self._memo.get(key)
        if val is None:
            w = self.weight(n - 1) if self.kind == "first" else self.weight(k)
            val = self.entry(n - 1, k - 1) + w * self.entry(n - 1, k)
            self._memo[key] = val
        return val


_TABLES: dict = {}


def _table(kind: str, r: int, s: int, q: QPoint) -> StirlingTable:
    key = (kind, r, s, q)
    tab = _TABLES.get(key)
    if tab is None:
        tab = _TABLES[key] = StirlingTable(kind, r, s, q)
    return tab


def stirling1(n: int, k: int, r: int = 1, s: int = 1, q: QPoint = SymbolicQ()):
    """First-kind generalized q-Stirling number via the recurrence."""
    return _table("first", r, s, q).entry(n, k)


def stirling2(n: int, k: int, r: int = 1, s: int = 1, q: QPoint = SymbolicQ()):
    """Second-kind generalized q-Stirling number via the recurrence."""
    return _table("second", r, s, q).entry(n, k)


def _invert(v):
    if isinstance(v, int):
        v = Fraction(v)
    if isinstance(v, Fraction):
        return 1 / v
    return v.inverse()


def _subset_product_sum(values, size: int):
    """Sum over strictly increasing index tuples of ``size`` chosen values of
    the product of the chosen values (literal enumeration, prefix-shared)."""
    n = len(values)
    if size < 0 or size > n:
        return 0
    if size == 0:
        return 1
    total = 0

    def rec(start, remaining, prefix):
        nonlocal total
        for i in range(start, n - remaining + 1):
            p = prefix * values[i]
            if remaining == 1:
                total = total + p
            else:
                rec(i + 1, remaining - 1, p)

    rec(0, size, 1)
    return total


@lru_cache(maxsize=None)
def _chosen_product_sums(n: int, r: int, s: int, q: QPoint):
    """Bucketed subset sweep: index j holds the sum over all strictly
    increasing j-tuples from { ([i]_q)^s : r <= i <= n-1 } of the tuple
    product."""
    tab = _table("first", r, s, q)
    values = [tab.weight(i) for i in range(r, n)]
    buckets = [0] * (len(values) + 1)
    buckets[0] = 1

    def rec(pos, size, prefix):
        if pos == len(values):
            if size:
                buckets[size] = buckets[size] + prefix
            return
        rec(pos + 1, size, prefix)
        rec(pos + 1, size + 1, prefix * values[pos])

    rec(0, 0, 1)
    return tuple(buckets)


@lru_cache(maxsize=None)
def _complement_product_sums(n: int, r: int, s: int, q: QPoint):
    """Bucketed subset sweep dual to :func:`_chosen_product_sums`: index j
    holds the sum over all j-subsets S of [r, n-1] of the product of the
    weights of the indices *outside* S."""
    tab = _table("first", r, s, q)
    values = [tab.weight(i) for i in range(r, n)]
    buckets = [0] * (len(values) + 1)

    def rec(pos, skipped, prefix):
        if pos == len(values):
            buckets[skipped] = buckets[skipped] + prefix
            return
        rec(pos + 1, skipped + 1, prefix)
        rec(pos + 1, skipped, prefix * values[pos])

    rec(0, 0, 1)
    return tuple(buckets)


def stirling1_closed(n: int, m: int, r: int = 1, s: int = 1, q: QPoint = SymbolicQ()):
    """Both combinatorial closed forms of the first-kind entry (n, m).

    Returns ``(via_reciprocal_sum, via_product_sum)``:

    * the ([n-1]_q!/[r-1]_q!)^s-weighted sum of 1/([i_1]...[i_{m-r}])^s over
      strictly increasing tuples from [r, n-1] (at a symbolic q the weight is
      cancelled against the common denominator, keeping everything
      polynomial; at a rational or root-of-unity q it is evaluated literally
      with field divisions), and
    * the plain elementary-symmetric sum of ([i_1]...[i_{n-m}])^s.

    Both must agree with :func:`stirling1`; they are exponential-cost oracle
    paths, not production paths.
    """
    if not 1 <= r <= m <= n - 1:
        raise BadParams("need r <= m <= n-1")
    if s < 1:
        raise BadParams("need s >= 1")
    if isinstance(q, SymbolicQ):
        recip = _complement_product_sums(n, r, s, q)[m - r]
    else:
        tab = _table("first", r, s, q)
        w = (qfact(n - 1, q) / qfact(r - 1, q)) ** s
        inv_values = [_invert(tab.weight(i)) for i in range(r, n)]
        recip = w * _subset_product_sum(inv_values, m - r)
    prod = _chosen_product_sums(n, r, s, q)[n - m]
    return recip, prod


def _monotone_product_sum(lo: int, hi: int, length: int, weight):
    """Sum over nondecreasing tuples lo <= i_1 <= ... <= i_length <= hi of
    the product of the weights."""
    if length == 0:
        return 1
    if hi < lo:
        return 0
    total = 0

    def rec(start, remaining, prefix):
        nonlocal total
        for i in range(start, hi + 1):
            p = prefix * weight(i)
            if remaining == 1:
                total = total + p
            else:
                rec(i, remaining - 1, p)

    rec(lo, length, 1)
    return total


def stirling2_iterated(n: int, k: int, r: int = 1, s: int = 1, q: QPoint = SymbolicQ()):
    """Both closed forms of the second-kind entry (n, k).

    Returns ``(via_nested_sums, via_monotone_tuples)``: the iterated
    geometric-style summation over levels r..k, and the sum over
    nondecreasing (n-k)-tuples from [r, k] of ([i_1]...[i_{n-k}])^s.  Both
    must agree with :func:`stirling2`.
    """
    if not (r + 1 <= k <= n):
        raise BadParams("need r+1 <= k <= n")
    if r < 1 or s < 1:
        raise BadParams("need r >= 1 and s >= 1")
    tab = _table("second", r, s, q)

    pow_cache: dict = {}

    def powval(t, e):
        key = (t, e)
        v = pow_cache.get(key)
        if v is None:
            v = pow_cache[key] = tab.weight(r + t) ** e
        return v

    memo: dict = {}

    def term(t, u):
        if t == 0:
            return powval(0, u)
        key = (t, u)
        v = memo.get(key)
        if v is None:
            acc = 0
            for i in range(u + 1):
                acc = acc + powval(t, u - i) * term(t - 1, i)
            v = memo[key] = acc
        return v

    nested = term(k - r, n - k)
    monotone = _monotone_product_sum(r, k, n - k, tab.weight)
    return nested, monotone


def orthogonality_check(n_max: int, r: int = 1, s: int = 1, q: QPoint = SymbolicQ()) -> CheckResult:
    """Verify both inversion identities between the two triangles.

    For all n, m <= n_max checks
    sum_k (-1)^(n-k) [n k] {k m} = delta(n, m) and
    sum_k (-1)^(k-m) {n k} [k m] = delta(n, m).
    """
    first = _table("first", r, s, q)
    second = _table("second", r, s, q)
    result = CheckResult(name=f"orthogonality(r={r}, s={s})")
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            hi = max(n, m)
            acc1 = 0
            acc2 = 0
            for k in range(hi + 1):
                f_nk = first.entry(n, k)
                s_km = second.entry(k, m)
                if not (f_nk == 0 or s_km == 0):
                    t = f_nk * s_km
                    acc1 = acc1 + (t if (n - k) % 2 == 0 else -t)
                s_nk = second.entry(n, k)
                f_km = first.entry(k, m)
                if not (s_nk == 0 or f_km == 0):
                    t = s_nk * f_km
                    acc2 = acc2 + (t if (k - m) % 2 == 0 else -t)
            delta = 1 if n == m else 0
            result.record(acc1 == delta, identity=1, n=n, m=m)
            result.record(acc2 == delta, identity=2, n=n, m=m)
    return result


@lru_cache(maxsize=None)
def rstirling1(n: int, k: int, r: int) -> int:
    """Classical r-Stirling number of the first kind (level 1, q = 1)."""
    if r < 1:
        raise BadParams("need r >= 1")
    if k < 0 or n < 0 or k > n:
        return 0
    if n == k:
        return 1
    if k < r:
        return 0
    return rstirling1(n - 1, k - 1, r) + (n - 1) * rstirling1(n - 1, k, r)
