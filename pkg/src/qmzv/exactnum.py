"""Exact arithmetic kernel: rationals, dense polynomials, truncated power
series, and determinant routines over generic commutative coefficient rings.

Scalars are plain ints and ``fractions.Fraction``.  A "ring element" below is
any immutable value supporting ``+``, ``-``, ``*`` and ``== 0`` against the
other coefficient types in play: Fraction, UniPoly itself (nesting a UniPoly
inside another gives bivariate polynomials), or field elements such as
``cyclo.CycloElem``.  Nothing mutates a value after construction, so all
values can be shared freely between concurrent tasks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction


class DivisionByZero(ZeroDivisionError):
    pass


class InexactDivision(ArithmeticError):
    """Raised when an exact ring division leaves a remainder (a bug signal)."""


class NonInvertibleConstantTerm(ValueError):
    pass


class BadConstantTerm(ValueError):
    pass


class DuplicateAbscissa(ValueError):
    pass


class ShapeViolation(ValueError):
    pass


_OPS = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "−": lambda a, b: a - b,
    "*": lambda a, b: a * b,
    "×": lambda a, b: a * b,
    "/": None,
    "÷": None,
}


def rat_arith(a, b, op: str) -> Fraction:
    """Exact rational arithmetic; ``op`` is one of ``+ - * /``.

    Results are canonical by construction (Fraction keeps gcd-reduced form
    with a positive denominator).
    """
    a, b = Fraction(a), Fraction(b)
    if op not in _OPS:
        raise ValueError(f"unknown operator {op!r}")
    fn = _OPS[op]
    if fn is not None:
        return fn(a, b)
    if b == 0:
        raise DivisionByZero("division by zero")
    return a / b


def _is_zero(c) -> bool:
    return c == 0


class UniPoly:
    """Dense univariate polynomial over a generic coefficient ring.

    The zero polynomial is the empty coefficient tuple; its degree is None
    (never -1).  Coefficient index equals the degree of the attached power.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def map_coeffs(self, fn) -> "UniPoly":
        """Apply ``fn`` to every coefficient (e.g. evaluate nested polys)."""
        return UniPoly(fn(c) for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            if _is_zero(other):
                return UniPoly()
            return UniPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, UniPoly):
            q, r = poly_divmod(self, other)
            if not r.is_zero():
                raise InexactDivision("polynomial division left a remainder")
            return q
        if isinstance(other, int):
            if other == 0:
                raise DivisionByZero("division by zero")
            other = Fraction(other)
        return UniPoly(c / other for c in self.coeffs)

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __call__(self, x):
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if not self.coeffs:
            return _is_zero(other)
        if len(self.coeffs) == 1:
            return self.coeffs[0] == other
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"


def poly_str(p: UniPoly, var: str = "x") -> str:
    """Readable form like ``1 - 2*x + x^3`` (coefficients via str())."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if _is_zero(c):
            continue
        cs = str(c)
        if k == 0:
            parts.append(cs)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            parts.append(mono if cs == "1" else f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
    out = parts[0]
    for term in parts[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


def exact_div(a, b):
    """Division that must be exact in the ambient ring; raises otherwise."""
    if isinstance(a, UniPoly) or isinstance(b, UniPoly):
        pa = a if isinstance(a, UniPoly) else UniPoly((a,))
        pb = b if isinstance(b, UniPoly) else UniPoly((b,))
        q, r = poly_divmod(pa, pb)
        if not r.is_zero():
            raise InexactDivision("inexact polynomial division")
        return q
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise DivisionByZero("division by zero")
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(f"{a} not divisible by {b}")
        return q
    return a / b


def poly_divmod(a: UniPoly, b: UniPoly):
    """Quotient and remainder of dense polynomials.

    Leading-coefficient divisions go through :func:`exact_div`, so the routine
    works over fields and, when divisibility holds, over nested polynomial
    rings as well.
    """
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if a.degree() is None or (b.degree() is not None and a.degree() < b.degree()):
        return UniPoly(), a
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    q = [0] * (len(rem) - db)
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[i + db]
        if _is_zero(c):
            continue
        f = exact_div(c, lead)
        q[i] = f
        for j, bc in enumerate(b.coeffs):
            rem[i + j] = rem[i + j] - f * bc
    return UniPoly(q), UniPoly(rem[:db])


def poly_xgcd(a: UniPoly, b: UniPoly):
    """Extended Euclid over a field: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = a, b
    s0, s1 = UniPoly((1,)), UniPoly()
    t0, t1 = UniPoly(), UniPoly((1,))
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def poly_interpolate(points: Sequence) -> UniPoly:
    """Lagrange interpolation through exact rational points.

    Returns the unique polynomial of degree < len(points) passing through all
    (x, y) pairs; raises DuplicateAbscissa on repeated x values.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("repeated x coordinate")
    total = UniPoly()
    for i, (xi, yi) in enumerate(pts):
        basis = UniPoly((Fraction(1),))
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            basis = basis * UniPoly((-xj, Fraction(1)))
            denom *= xi - xj
        total = total + basis * (yi / denom)
    return total


class TruncSeries:
    """Formal power series truncated at a fixed order N.

    ``coeffs[k]`` is the coefficient of t^k for k < N.  Integer inputs are
    promoted to Fraction so later divisions by integers stay exact.  Binary
    operations truncate to the smaller participating order; precision is never
    silently extended.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError("order must be >= 1")
        cs = [Fraction(c) if isinstance(c, int) else c for c in list(coeffs)[:order]]
        cs.extend(Fraction(0) for _ in range(order - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            cs = list(self.coeffs)
            cs[0] = cs[0] + other
            return TruncSeries(self.order, cs)
        n = min(self.order, other.order)
        return TruncSeries(n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.order, [c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if _is_zero(a):
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative series power; use series_inv first")
        result = TruncSeries(self.order, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return f"TruncSeries({self.order}, {list(self.coeffs)!r})"


def _ring_inv(c):
    if isinstance(c, int):
        c = Fraction(c)
    if isinstance(c, Fraction):
        if c == 0:
            raise NonInvertibleConstantTerm("constant term is zero")
        return Fraction(1) / c
    if isinstance(c, UniPoly):
        if c.degree() == 0:
            return UniPoly((_ring_inv(c.coeffs[0]),))
        raise NonInvertibleConstantTerm("constant term is not a unit")
    inv = getattr(c, "inverse", None)
    if inv is None:
        raise NonInvertibleConstantTerm(f"cannot invert {c!r}")
    return inv()


def series_inv(f: TruncSeries) -> TruncSeries:
    """Multiplicative inverse: f * series_inv(f) = 1 + O(t^N)."""
    c0inv = _ring_inv(f.coeffs[0])
    out = [c0inv]
    for k in range(1, f.order):
        acc = 0
        for i in range(1, k + 1):
            fi = f.coeffs[i]
            if not _is_zero(fi):
                acc = acc + fi * out[k - i]
        out.append(-(c0inv * acc))
    return TruncSeries(f.order, out)


def series_log(f: TruncSeries) -> TruncSeries:
    """log of a series with constant term exactly 1."""
    if not f.coeffs[0] == 1:
        raise BadConstantTerm("series_log needs constant term 1")
    out = [f.coeffs[0] * 0]
    for k in range(1, f.order):
        acc = f.coeffs[k]
        for j in range(1, k):
            fk = f.coeffs[k - j]
            if not _is_zero(fk):
                acc = acc - Fraction(j, k) * (out[j] * fk)
        out.append(acc)
    return TruncSeries(f.order, out)


def series_exp(f: TruncSeries) -> TruncSeries:
    """exp of a series with constant term exactly 0."""
    if not _is_zero(f.coeffs[0]):
        raise BadConstantTerm("series_exp needs constant term 0")
    out = [1]
    for k in range(1, f.order):
        acc = 0
        for j in range(1, k + 1):
            fj = f.coeffs[j]
            if not _is_zero(fj):
                acc = acc + j * (fj * out[k - j])
        out.append(acc / k if not isinstance(acc, int) else Fraction(acc, k))
    return TruncSeries(f.order, out)


def _check_square(rows):
    m = [list(r) for r in rows]
    d = len(m)
    for r in m:
        if len(r) != d:
            raise ShapeViolation("matrix is not square")
    return m, d


def det_fraction_free(rows) -> object:
    """Determinant by fraction-free (Bareiss) elimination.

    Exact over any integral domain whose elements divide exactly through
    :func:`exact_div` (Fraction, int, field elements, polynomials over a
    field).
    """
    m, d = _check_square(rows)
    if d == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(d - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, d):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[0][0] * 0
        pivot = m[k][k]
        for i in range(k + 1, d):
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, d):
                row_i[j] = exact_div(row_i[j] * pivot - row_i[k] * row_k[j], prev)
        prev = pivot
    return sign * m[d - 1][d - 1]


def det_cofactor(rows) -> object:
    """Division-free determinant by minor expansion (memoized on columns).

    Works over any commutative ring; cost grows as d * 2^d, so keep d small.
    """
    m, d = _check_square(rows)
    if d == 0:
        return 1
    memo = {}

    def rec(cols):
        if not cols:
            return 1
        key = cols
        if key in memo:
            return memo[key]
        r = d - len(cols)
        acc = None
        sign = 1
        for idx, c in enumerate(cols):
            a = m[r][c]
            if not _is_zero(a):
                sub = rec(cols[:idx] + cols[idx + 1:])
                term = a * sub if sign > 0 else -(a * sub)
                acc = term if acc is None else acc + term
            sign = -sign
        if acc is None:
            acc = m[0][0] * 0
        memo[key] = acc
        return acc

    return rec(tuple(range(d)))


def det_hessenberg(rows) -> object:
    """Determinant of a lower-Hessenberg matrix by last-row expansion.

    Requires M[i][j] == 0 whenever j > i + 1; runs in O(d^2) ring
    multiplications and uses no division, so any commutative ring works.
    """
    m, d = _check_square(rows)
    for i in range(d):
        for j in range(i + 2, d):
            if not _is_zero(m[i][j]):
                raise ShapeViolation(f"nonzero entry at ({i}, {j}) above the superdiagonal")
    dets = [1]
    for k in range(1, d + 1):
        i = k - 1
        acc = m[i][i] * dets[k - 1]
        prod = 1
        sign = -1
        for j in range(k - 1, 0, -1):
            prod = prod * m[j - 1][j]
            entry = m[i][j - 1]
            if not _is_zero(entry):
                term = entry * prod * dets[j - 1]
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        dets.append(acc)
    return dets[d]
