"""Canonical rational functions: reduced fraction of Polys with monic denominator."""

from __future__ import annotations

import math
from fractions import Fraction

from .poly import Poly, poly_gcd


class RatFn:
    """Immutable rational function in canonical form.

    Invariants: gcd(num, den) = 1, den monic and nonzero; equal functions have
    identical representations, so == is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None, _canonical: bool = False):
        if den is None:
            den = Poly.one()
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            if num.is_zero():
                den = Poly.one()
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lead = den.lc()
                if lead != 1:
                    inv = Fraction(1) / lead
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "RatFn":
        return _RZERO

    @staticmethod
    def one() -> "RatFn":
        return _RONE

    @staticmethod
    def x() -> "RatFn":
        return _RX

    @staticmethod
    def const(value) -> "RatFn":
        return RatFn(Poly.const(value), Poly.one(), _canonical=True)

    @staticmethod
    def from_poly(p: Poly) -> "RatFn":
        return RatFn(p, Poly.one(), _canonical=True)

    @staticmethod
    def from_fraction(num, den) -> "RatFn":
        return RatFn(Poly.from_terms(num) if isinstance(num, dict) else num,
                     Poly.from_terms(den) if isinstance(den, dict) else den)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num.coeff(0)

    @property
    def rational_degree(self) -> int:
        """max(deg num, deg den); 0 for constants (including zero)."""
        return max(self.num.degree, self.den.degree, 0)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self) -> "RatFn":
        return RatFn(-self.num, self.den, _canonical=True)

    def __add__(self, other) -> "RatFn":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RatFn(a + c, b)
        g = poly_gcd(b, d)
        if g.degree == 0:
            num = a * d + c * b
            if num.is_zero():
                return _RZERO
            return _monic_pair(num, b * d)
        b1 = b.exact_div(g)
        d1 = d.exact_div(g)
        num = a * d1 + c * b1
        g2 = poly_gcd(num, g)
        if g2.degree > 0:
            num = num.exact_div(g2)
            g = g.exact_div(g2)
        return _monic_pair(num, b1 * d1 * g)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFn":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFn":
        return _coerce(other) - self

    def __mul__(self, other) -> "RatFn":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return _RZERO
        g1 = poly_gcd(a, d)
        if g1.degree > 0:
            a = a.exact_div(g1)
            d = d.exact_div(g1)
        g2 = poly_gcd(c, b)
        if g2.degree > 0:
            c = c.exact_div(g2)
            b = b.exact_div(g2)
        return _monic_pair(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return _monic_pair(self.den, self.num)

    def __truediv__(self, other) -> "RatFn":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFn":
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFn":
        if n == 0:
            return _RONE
        if n < 0:
            return self.inverse() ** (-n)
        # canonical parts stay coprime under powers
        return RatFn(self.num**n, self.den**n, _canonical=True)

    def derivative(self, n: int = 1) -> "RatFn":
        f = self
        for _ in range(n):
            num = f.num.derivative() * f.den - f.num * f.den.derivative()
            if num.is_zero():
                return _RZERO
            den = f.den * f.den
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            f = _monic_pair(num, den)
        return f

    def eval(self, x0):
        """Exact evaluation at a Fraction (raises ZeroDivisionError on poles) or complex."""
        nv = self.num.eval(x0)
        dv = self.den.eval(x0)
        return nv / dv

    def eval_algnum(self, a):
        return self.num.eval_algnum(a) / self.den.eval_algnum(a)

    # -- comparisons / rendering -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFn.const(other)
        if not isinstance(other, RatFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        ns = str(self.num)
        if self.num.degree > 0 or self.num.coeff(0) < 0:
            ns = f"({ns})"
        return f"{ns}/({self.den})"

    def __repr__(self) -> str:
        return f"RatFn({self})"


def _coerce(v):
    if isinstance(v, RatFn):
        return v
    if isinstance(v, Poly):
        return RatFn.from_poly(v)
    if isinstance(v, (int, Fraction)):
        return RatFn.const(v)
    return NotImplemented


def _monic_pair(num: Poly, den: Poly) -> RatFn:
    """Build a RatFn from a coprime pair, normalizing the denominator to monic."""
    if num.is_zero():
        return _RZERO
    lead = den.lc()
    if lead != 1:
        inv = Fraction(1) / lead
        num = num * inv
        den = den * inv
    return RatFn(num, den, _canonical=True)


_RZERO = RatFn(Poly.zero(), Poly.one(), _canonical=True)
_RONE = RatFn(Poly.one(), Poly.one(), _canonical=True)
_RX = RatFn(Poly.x(), Poly.one(), _canonical=True)


def compose(f: RatFn, g: RatFn) -> RatFn:
    """f(g(x)) in canonical form; g must be non-constant."""
    if g.is_constant():
        raise ValueError("composition with a constant inner function")
    n, d = f.num, f.den
    m = max(n.degree, d.degree)
    if m <= 0:
        return f
    p, q = g.num, g.den
    # homogenize: f(p/q) = sum a_i p^i q^(m-i) / sum b_j p^j q^(m-j)
    p_pows = [Poly.one()]
    q_pows = [Poly.one()]
    for i in range(m):
        p_pows.append(p_pows[-1] * p)
        q_pows.append(q_pows[-1] * q)
    num = Poly.zero()
    den = Poly.zero()
    for e in range(m + 1):
        cn = n.coeff(e)
        if cn:
            num = num + (p_pows[e] * q_pows[m - e]) * cn
        cd = d.coeff(e)
        if cd:
            den = den + (p_pows[e] * q_pows[m - e]) * cd
    return RatFn(num, den)


def diff(f: RatFn, n: int = 1) -> RatFn:
    if n < 0:
        raise ValueError("negative differentiation order")
    return f.derivative(n)


def exponent_support_gcd(f: RatFn) -> int:
    """Largest k with f(x) = g(x^k) for rational g; 0 means any k (constant f)."""
    if f.is_zero() or f.is_constant():
        return 0
    g = 0
    for e in f.num.support():
        g = math.gcd(g, e)
    for e in f.den.support():
        g = math.gcd(g, e)
    return max(g, 1)


def substitute_power_root(f: RatFn, k: int) -> RatFn:
    """f(x^(1/k)) for f a function of x^k (exponents all divisible by k)."""
    if k == 1:
        return f
    num = f.num.map_exponents(lambda e: _exact_quot(e, k))
    den = f.den.map_exponents(lambda e: _exact_quot(e, k))
    return RatFn(num, den, _canonical=True)


def _exact_quot(e: int, k: int) -> int:
    if e % k:
        raise ValueError(f"exponent {e} not divisible by {k}")
    return e // k
