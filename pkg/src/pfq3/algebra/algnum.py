"""Quadratic algebraic numbers: values p + q*sqrt(d) with exact arithmetic.

d is a squarefree integer (negative allowed, so complex conjugate pairs are
representable); rationals are the q = 0 case with d = 0. Arithmetic between
two irrational values requires a common d.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .intutil import squarefree_part


class AlgNum:
    __slots__ = ("p", "q", "d")

    def __init__(self, p, q=0, d: int = 0):
        p = Fraction(p)
        q = Fraction(q)
        if q == 0 or d in (0, 1):
            if d == 1:
                p, q, d = p + q, Fraction(0), 0
            else:
                q, d = Fraction(0), 0
        self.p = p
        self.q = q
        self.d = d

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(v) -> "AlgNum":
        return AlgNum(Fraction(v))

    @staticmethod
    def sqrt_of(v) -> "AlgNum":
        """Exact square root of a rational, as rational or p + q*sqrt(d)."""
        v = Fraction(v)
        if v == 0:
            return AlgNum(0)
        w = v.numerator * v.denominator
        s, d = squarefree_part(w)
        # sqrt(v) = sqrt(w)/den = s*sqrt(d)/den
        if d == 1:
            return AlgNum(Fraction(s, v.denominator))
        return AlgNum(0, Fraction(s, v.denominator), d)

    @staticmethod
    def quadratic_roots(b, c) -> tuple["AlgNum", "AlgNum"]:
        """Roots of z^2 + b z + c with rational b, c."""
        b = Fraction(b)
        c = Fraction(c)
        disc = b * b - 4 * c
        half = AlgNum(-b / 2)
        rad = AlgNum.sqrt_of(disc)
        shift = rad * AlgNum(Fraction(1, 2))
        return half + shift, half - shift

    # -- predicates --------------------------------------------------------

    def is_rational(self) -> bool:
        return self.q == 0

    def as_rational(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self} is not rational")
        return self.p

    def is_integer(self) -> bool:
        return self.q == 0 and self.p.denominator == 1

    def is_nonpositive_integer(self) -> bool:
        return self.is_integer() and self.p <= 0

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def conjugate(self) -> "AlgNum":
        return AlgNum(self.p, -self.q, self.d)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "AlgNum":
        if isinstance(other, AlgNum):
            return other
        return AlgNum(Fraction(other))

    def _join(self, other: "AlgNum") -> int:
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"incompatible radicands {self.d} and {other.d}")
        return self.d or other.d

    def __add__(self, other) -> "AlgNum":
        other = self._coerce(other)
        d = self._join(other)
        return AlgNum(self.p + other.p, self.q + other.q, d)

    __radd__ = __add__

    def __neg__(self) -> "AlgNum":
        return AlgNum(-self.p, -self.q, self.d)

    def __sub__(self, other) -> "AlgNum":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "AlgNum":
        return self._coerce(other) - self

    def __mul__(self, other) -> "AlgNum":
        other = self._coerce(other)
        d = self._join(other)
        return AlgNum(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "AlgNum":
        n = self.p * self.p - self.q * self.q * self.d
        if n == 0:
            raise ZeroDivisionError("inverse of zero algebraic number")
        return AlgNum(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other) -> "AlgNum":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "AlgNum":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "AlgNum":
        if n < 0:
            return self.inverse() ** (-n)
        out = AlgNum(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons / rendering -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AlgNum(other)
        if not isinstance(other, AlgNum):
            return NotImplemented
        return self.p == other.p and self.q == other.q and self.d == other.d

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.d))

    def sort_key(self):
        """Deterministic order: rationals ascending, then surds, conjugates adjacent."""
        if self.q == 0:
            return (0, self.p, 0, Fraction(0), 0)
        return (1, self.p, self.d, abs(self.q), 0 if self.q > 0 else 1)

    def to_complex(self) -> complex:
        if self.q == 0:
            return complex(self.p)
        root = cmath.sqrt(complex(self.d)) if self.d < 0 else complex(math.sqrt(self.d))
        return complex(self.p) + complex(self.q) * root

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        if self.p == 0:
            lead = ""
        else:
            lead = f"{self.p} "
        sign = "+" if self.q > 0 else "-"
        if not lead and self.q < 0:
            return f"-{abs(self.q)}*sqrt({self.d})"
        if not lead:
            return f"{self.q}*sqrt({self.d})"
        return f"{lead}{sign} {abs(self.q)}*sqrt({self.d})"

    def __repr__(self) -> str:
        return f"AlgNum({self})"


def prod_algnum(values) -> AlgNum:
    out = AlgNum(1)
    for v in values:
        out = out * v
    return out
