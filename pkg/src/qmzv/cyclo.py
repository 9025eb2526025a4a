"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) and
reduced modulo the n-th cyclotomic polynomial Phi_n.  Working modulo Phi_n
(not x^n - 1) keeps the quotient a field, which the inverse powers
1/(1 - zeta^i) require.  Coordinates are rationals; integer coordinates are
kept as ints internally since sums and products of roots of unity stay in
Z[zeta], which keeps the hot paths on machine integers.

Contexts are cached per n and immutable; elements from different contexts
never mix (checked, raises ContextMismatch).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exactnum import UniPoly, poly_divmod, poly_xgcd


class ZeroInverse(ZeroDivisionError):
    pass


class ContextMismatch(ValueError):
    pass


class NotRational(ValueError):
    """A coordinate vector expected to be rational has nonzero tail.

    Carries the offending element; raising it signals a computation bug
    because every value this library rationalizes is fixed by the Galois
    action and therefore genuinely rational.
    """

    def __init__(self, element):
        super().__init__(f"element is not rational: {element!r}")
        self.element = element


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> UniPoly:
    """n-th cyclotomic polynomial with integer coefficients.

    Computed by exact division of x^n - 1 by Phi_d over all proper divisors
    d of n; the base case Phi_1 = x - 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return UniPoly((-1, 1))
    num = UniPoly((-1,) + (0,) * (n - 1) + (1,))
    for d in range(1, n):
        if n % d == 0:
            q, r = poly_divmod(num, cyclotomic_poly(d))
            if not r.is_zero():
                raise ArithmeticError("cyclotomic division failed")
            num = q
    return num


class CycloCtx:
    """Field context for Q(zeta_n): the modulus Phi_n plus reduction tables."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.phi_poly = cyclotomic_poly(n)
        self.degree = self.phi_poly.degree()
        d = self.degree
        # x^(d+t) mod Phi_n for t = 0 .. d-2, as integer coordinate tuples.
        red = []
        base = [-c for c in self.phi_poly.coeffs[:-1]]
        red.append(tuple(base))
        cur = base
        for _ in range(d - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c + top * b for c, b in zip(cur, base)]
            red.append(tuple(cur))
        self._reduction = red
        # coordinates of zeta^m for m = 0 .. n-1
        pows = []
        coords = [1] + [0] * (d - 1)
        for _ in range(n):
            pows.append(tuple(coords))
            top = coords[-1]
            coords = [0] + coords[:-1]
            if top:
                coords = [c + top * b for c, b in zip(coords, base)]
        self._zeta_pows = pows
        self._phi_frac = UniPoly(tuple(Fraction(c) for c in self.phi_poly.coeffs))

    def __repr__(self):
        return f"CycloCtx(n={self.n})"

    def __eq__(self, other):
        return isinstance(other, CycloCtx) and self.n == other.n

    def __hash__(self):
        return hash(("CycloCtx", self.n))

    def element(self, coords) -> "CycloElem":
        cs = list(coords)
        if len(cs) > self.degree:
            raise ValueError("coordinate vector too long")
        cs.extend(0 for _ in range(self.degree - len(cs)))
        return CycloElem(self, tuple(cs))

    def from_rational(self, x) -> "CycloElem":
        return self.element([Fraction(x)])

    def zero(self) -> "CycloElem":
        return self.element([])

    def one(self) -> "CycloElem":
        return self.element([1])

    def zeta(self) -> "CycloElem":
        return CycloElem(self, self._zeta_pows[1 % self.n])

    def zeta_power(self, m: int) -> "CycloElem":
        return CycloElem(self, self._zeta_pows[m % self.n])

    def _mul_coords(self, a, b):
        d = self.degree
        conv = [0] * (2 * d - 1) if d > 1 else [0]
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj != 0:
                    conv[i + j] += ai * bj
        out = conv[:d]
        for t in range(d, len(conv)):
            c = conv[t]
            if c != 0:
                row = self._reduction[t - d]
                for j, rj in enumerate(row):
                    if rj != 0:
                        out[j] = out[j] + c * rj
        return tuple(out)


@lru_cache(maxsize=None)
def cyclo_ctx(n: int) -> CycloCtx:
    return CycloCtx(n)


class CycloElem:
    """Immutable element of Q(zeta_n) in power-basis coordinates."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: CycloCtx, coords):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coords", tuple(coords))

    def __setattr__(self, name, value):
        raise AttributeError("CycloElem is immutable")

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.ctx.n != self.ctx.n:
                raise ContextMismatch(
                    f"mixing Q(zeta_{self.ctx.n}) with Q(zeta_{other.ctx.n})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.element([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.ctx, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.ctx, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.ctx, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.ctx, tuple(a * other for a in self.coords))
        return CycloElem(self.ctx, self.ctx._mul_coords(self.coords, o.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            inv = Fraction(1) / Fraction(other)
            return CycloElem(self.ctx, tuple(a * inv for a in self.coords))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            if other.ctx.n != self.ctx.n:
                raise ContextMismatch("comparing elements of different fields")
            return all(a == b for a, b in zip(self.coords, other.coords))
        if isinstance(other, (int, Fraction)):
            return self.coords[0] == other and all(a == 0 for a in self.coords[1:])
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def inverse(self) -> "CycloElem":
        """Multiplicative inverse via the extended Euclidean algorithm.

        Phi_n is irreducible over Q, so the gcd with any nonzero
        representative is a nonzero constant.
        """
        if self.is_zero():
            raise ZeroInverse("inverse of zero")
        a = UniPoly(tuple(Fraction(c) for c in self.coords))
        g, u, _ = poly_xgcd(a, self.ctx._phi_frac)
        if g.degree() != 0:
            raise ZeroInverse("element shares a factor with the modulus")
        inv_poly = u * (Fraction(1) / g.coeffs[0])
        _, rem = poly_divmod(inv_poly, self.ctx._phi_frac)
        return self.ctx.element(rem.coeffs)

    def galois(self, a: int) -> "CycloElem":
        """Image under zeta -> zeta^a; requires gcd(a, n) = 1."""
        if math.gcd(a, self.ctx.n) != 1:
            raise ValueError("galois substitution needs gcd(a, n) = 1")
        d = self.ctx.degree
        out = [0] * d
        for i, ci in enumerate(self.coords):
            if ci == 0:
                continue
            pw = self.ctx._zeta_pows[(i * a) % self.ctx.n]
            for j, pj in enumerate(pw):
                if pj != 0:
                    out[j] = out[j] + ci * pj
        return CycloElem(self.ctx, tuple(out))

    def __repr__(self):
        return f"CycloElem(n={self.ctx.n}, {list(self.coords)!r})"


def as_rational(a: CycloElem) -> Fraction:
    """Extract the rational value of an element; NotRational if any higher
    power-basis coordinate is nonzero."""
    if any(c != 0 for c in a.coords[1:]):
        raise NotRational(a)
    return Fraction(a.coords[0])


def product_one_minus_powers(ctx: CycloCtx) -> Fraction:
    """prod_{j=1..n-1} (1 - zeta^j), rationalized; equals n."""
    if ctx.n < 2:
        raise ValueError("needs n >= 2")
    acc = ctx.one()
    one = ctx.one()
    for j in range(1, ctx.n):
        acc = acc * (one - ctx.zeta_power(j))
    return as_rational(acc)
