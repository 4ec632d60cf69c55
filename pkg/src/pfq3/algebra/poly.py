"""Exact univariate polynomials over the rationals.

A polynomial is stored sparsely as an integer coefficient map plus one common
positive denominator, kept normalized so that gcd(content, denominator) = 1.
All arithmetic is exact; the heavy operations (gcd, exact division) run on the
integer core so that big operands never touch per-coefficient Fraction math.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .intutil import divisors, factor_int

# deterministic pool of 62-bit primes for modular gcd
_GCD_PRIMES: list[int] = []


def _prime_pool() -> list[int]:
    if not _GCD_PRIMES:
        from .intutil import is_prime

        n = (1 << 62) - 57
        while len(_GCD_PRIMES) < 400:
            if is_prime(n):
                _GCD_PRIMES.append(n)
            n -= 2
    return _GCD_PRIMES


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_c", "_den", "_deg", "_hash")

    def __init__(self, coeffs: dict[int, int], den: int = 1):
        if den == 0:
            raise ZeroDivisionError("polynomial denominator is zero")
        if den < 0:
            den = -den
            coeffs = {e: -v for e, v in coeffs.items()}
        coeffs = {e: v for e, v in coeffs.items() if v}
        if coeffs:
            g = den
            for v in coeffs.values():
                g = math.gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                coeffs = {e: v // g for e, v in coeffs.items()}
                den //= g
        else:
            den = 1
        self._c = coeffs
        self._den = den
        self._deg = max(coeffs) if coeffs else -1
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def one() -> "Poly":
        return _ONE

    @staticmethod
    def x(power: int = 1) -> "Poly":
        return Poly({power: 1})

    @staticmethod
    def const(value) -> "Poly":
        f = Fraction(value)
        return Poly({0: f.numerator}, f.denominator)

    @staticmethod
    def from_terms(terms: dict[int, "Fraction | int"]) -> "Poly":
        fr = {e: Fraction(v) for e, v in terms.items()}
        den = 1
        for v in fr.values():
            den = den * v.denominator // math.gcd(den, v.denominator)
        return Poly({e: int(v * den) for e, v in fr.items()}, den)

    @staticmethod
    def from_coeff_list(coeffs) -> "Poly":
        """Dense list [c0, c1, ...] with c_i the coefficient of x^i."""
        return Poly.from_terms({i: c for i, c in enumerate(coeffs)})

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return self._deg

    def is_zero(self) -> bool:
        return self._deg < 0

    def is_one(self) -> bool:
        return self._c == {0: 1} and self._den == 1

    def is_constant(self) -> bool:
        return self._deg <= 0

    def coeff(self, e: int) -> Fraction:
        return Fraction(self._c.get(e, 0), self._den)

    def lc(self) -> Fraction:
        if self._deg < 0:
            return Fraction(0)
        return Fraction(self._c[self._deg], self._den)

    def constant_value(self) -> Fraction:
        if self._deg > 0:
            raise ValueError("polynomial is not constant")
        return self.coeff(0)

    def support(self):
        return self._c.keys()

    def terms(self) -> list[tuple[int, Fraction]]:
        """(exponent, coefficient) pairs in decreasing exponent order."""
        return [(e, Fraction(v, self._den)) for e, v in sorted(self._c.items(), reverse=True)]

    def int_core(self) -> tuple[dict[int, int], int]:
        """The primitive integer coefficient map and the common denominator."""
        return self._c, self._den

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly({e: -v for e, v in self._c.items()}, self._den)

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        da, db = self._den, other._den
        g = math.gcd(da, db)
        ma, mb = db // g, da // g
        out = {e: v * ma for e, v in self._c.items()}
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v * mb
        return Poly(out, da * ma)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if self._deg < 0 or other._deg < 0:
                return _ZERO
            a, b = self._c, other._c
            if len(a) > len(b):
                a, b = b, a
            out: dict[int, int] = {}
            for ea, va in a.items():
                for eb, vb in b.items():
                    e = ea + eb
                    out[e] = out.get(e, 0) + va * vb
            return Poly(out, self._den * other._den)
        f = Fraction(other)
        return Poly({e: v * f.numerator for e, v in self._c.items()}, self._den * f.denominator)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, f) -> "Poly":
        return self * f

    def monic(self) -> "Poly":
        if self._deg < 0:
            return self
        lead = self._c[self._deg]
        return Poly({e: v * (1 if lead > 0 else -1) for e, v in self._c.items()}, abs(lead))

    def primitive_int(self) -> dict[int, int]:
        """Integer coefficients with content removed (sign of lc preserved)."""
        return dict(self._c)

    def derivative(self, n: int = 1) -> "Poly":
        p = self
        for _ in range(n):
            p = Poly({e - 1: v * e for e, v in p._c.items() if e > 0}, p._den)
        return p

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact rational division with remainder."""
        if other._deg < 0:
            raise ZeroDivisionError("polynomial division by zero")
        if self._deg < other._deg:
            return _ZERO, self
        rem = {e: Fraction(v, self._den) for e, v in self._c.items()}
        div = {e: Fraction(v, other._den) for e, v in other._c.items()}
        dlead = other._deg
        dlc = div[dlead]
        quo: dict[int, Fraction] = {}
        deg = self._deg
        while rem and deg >= dlead:
            deg = max(rem)
            if deg < dlead:
                break
            q = rem[deg] / dlc
            quo[deg - dlead] = q
            for e, v in div.items():
                ee = e + deg - dlead
                nv = rem.get(ee, Fraction(0)) - q * v
                if nv:
                    rem[ee] = nv
                else:
                    rem.pop(ee, None)
        return Poly.from_terms(quo), Poly.from_terms(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient self/other, which must be exact."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def compose(self, other: "Poly") -> "Poly":
        """self(other(x)) by Horner over the dense coefficient list."""
        if self._deg < 0:
            return _ZERO
        result = _ZERO
        for e in range(self._deg, -1, -1):
            result = result * other + Poly({0: self._c.get(e, 0)}, self._den)
        return result

    def eval(self, x0):
        """Evaluate at a Fraction/int (exact) or complex point."""
        if self._deg < 0:
            return 0 * x0 if isinstance(x0, complex) else Fraction(0)
        exps = sorted(self._c, reverse=True)
        if isinstance(x0, complex):
            acc = 0j
            prev = exps[0]
            for e in exps:
                acc *= x0 ** (prev - e)
                acc += self._c[e]
                prev = e
            return acc * x0**prev / self._den
        x0 = Fraction(x0)
        acc = Fraction(0)
        prev = exps[0]
        for e in exps:
            acc *= x0 ** (prev - e)
            acc += self._c[e]
            prev = e
        return acc * x0**prev / self._den

    def eval_algnum(self, a):
        """Evaluate at an AlgNum (quadratic algebraic number); exact."""
        from .algnum import AlgNum

        acc = AlgNum.from_rational(0)
        for e in range(self._deg, -1, -1):
            acc = acc * a + AlgNum.from_rational(Fraction(self._c.get(e, 0), self._den))
        return acc

    def shift_exponents(self, k: int) -> "Poly":
        """Multiply by x^k (k may be negative if every exponent allows it)."""
        out = {}
        for e, v in self._c.items():
            if e + k < 0:
                raise ValueError("negative exponent in shift")
            out[e + k] = v
        return Poly(out, self._den)

    def map_exponents(self, fn) -> "Poly":
        return Poly({fn(e): v for e, v in self._c.items()}, self._den)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self._den == other._den and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._den, tuple(sorted(self._c.items()))))
        return self._hash

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if self._deg < 0:
            return "0"
        parts = []
        for e, c in self.terms():
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                xs = "x" if e == 1 else f"x^{e}"
                body = xs if c == 1 else f"{c}*{xs}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


_ZERO = Poly({})
_ONE = Poly({0: 1})


# ---------------------------------------------------------------------------
# gcd machinery (modular, on the integer core)
# ---------------------------------------------------------------------------


def _dense_int(c: dict[int, int], deg: int) -> list[int]:
    out = [0] * (deg + 1)
    for e, v in c.items():
        out[e] = v
    return out


def _gcd_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd of dense coefficient lists over GF(p)."""
    a = [v % p for v in a]
    b = [v % p for v in b]

    def trim(u):
        while u and u[-1] == 0:
            u.pop()
        return u

    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            shift = len(a) - 1 - db
            factor = a[-1] * inv % p
            for i in range(db + 1):
                a[i + shift] = (a[i + shift] - factor * b[i]) % p
            a = trim(a)
        a, b = b, a
    inv = pow(a[-1], -1, p)
    return [v * inv % p for v in a]


def _content(c: dict[int, int]) -> int:
    g = 0
    for v in c.values():
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def _int_primitive(c: dict[int, int]) -> dict[int, int]:
    g = _content(c)
    if g > 1:
        return {e: v // g for e, v in c.items()}
    return dict(c)


def _int_exact_div(a: dict[int, int], b: dict[int, int]) -> dict[int, int] | None:
    """Exact division of integer polys; None if inexact. Divisor must be primitive."""
    if not b:
        raise ZeroDivisionError
    da, db = max(a), max(b)
    if da < db:
        return None
    rem = dict(a)
    blc = b[db]
    quo: dict[int, int] = {}
    while rem:
        dr = max(rem)
        if dr < db:
            return None
        lead = rem[dr]
        q, r = divmod(lead, blc)
        if r:
            return None
        shift = dr - db
        quo[shift] = q
        for e, v in b.items():
            ee = e + shift
            nv = rem.get(ee, 0) - q * v
            if nv:
                rem[ee] = nv
            else:
                rem.pop(ee, None)
    return quo


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor, computed by modular images with CRT."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return _ONE
    ca = _int_primitive(a._c)
    cb = _int_primitive(b._c)
    da, db = max(ca), max(cb)
    lead_prod = ca[da] * cb[db]
    d = math.gcd(ca[da], cb[db])
    dense_a = _dense_int(ca, da)
    dense_b = _dense_int(cb, db)

    best_deg = min(da, db) + 1
    acc: list[int] = []
    mod = 1
    last_candidate: dict[int, int] | None = None
    for p in _prime_pool():
        if lead_prod % p == 0:
            continue
        g = _gcd_mod_p(dense_a, dense_b, p)
        dg = len(g) - 1
        if dg == 0:
            return _ONE
        scale = d % p
        g = [v * scale % p for v in g]
        if dg < best_deg:
            best_deg = dg
            acc = g
            mod = p
            last_candidate = None
        elif dg == best_deg:
            # CRT combine
            inv = pow(mod % p, -1, p)
            new = []
            for i in range(dg + 1):
                x0 = acc[i] if i < len(acc) else 0
                x1 = g[i]
                t = (x1 - x0) % p * inv % p
                new.append(x0 + mod * t)
            acc = new
            mod *= p
        else:
            continue
        # symmetric lift and trial division
        half = mod // 2
        lifted = {i: (v if v <= half else v - mod) for i, v in enumerate(acc) if v % mod != 0}
        lifted = {e: v for e, v in lifted.items() if v}
        if not lifted or max(lifted) != best_deg:
            continue
        cand = _int_primitive(lifted)
        if cand == last_candidate:
            if _int_exact_div(ca, cand) is not None and _int_exact_div(cb, cand) is not None:
                return Poly(cand).monic()
        last_candidate = cand
        if mod.bit_length() > 124 or best_deg <= 2:
            if _int_exact_div(ca, cand) is not None and _int_exact_div(cb, cand) is not None:
                return Poly(cand).monic()
    raise ArithmeticError("modular gcd failed to stabilize")


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended gcd over Q: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = _ONE, _ZERO
    t0, t1 = _ZERO, _ONE
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return _ZERO, _ZERO, _ZERO
    c = r0.lc()
    inv = Fraction(1) / c
    return r0 * inv, s0 * inv, t0 * inv


# ---------------------------------------------------------------------------
# squarefree decomposition and rational roots
# ---------------------------------------------------------------------------


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic squarefree factors with multiplicities."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    if g.degree == 0:
        return [(p, 1)]
    out = []
    b = p.exact_div(g)
    c = dp.exact_div(g)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def _rational_roots_squarefree(p: Poly) -> list[Fraction]:
    """All rational roots of a squarefree polynomial."""
    roots = []
    c = _int_primitive(p._c)
    v = min(c)
    if v > 0:
        roots.append(Fraction(0))
        c = {e - v: w for e, w in c.items()}
    if max(c) == 0:
        return roots
    a0 = abs(c[0])
    an = abs(c[max(c)])
    p1 = sum(c.values())
    pm1 = sum(w if e % 2 == 0 else -w for e, w in c.items())
    poly = Poly(c)
    for num in divisors(a0):
        for den in divisors(an):
            if math.gcd(num, den) != 1:
                continue
            for s in (1, -1):
                if p1 != 0 and (s * num - den) != 0 and p1 % (s * num - den) != 0:
                    continue
                if pm1 != 0 and (s * num + den) != 0 and pm1 % (s * num + den) != 0:
                    continue
                cand = Fraction(s * num, den)
                if poly.eval(cand) == 0:
                    roots.append(cand)
    roots.sort()
    return roots


class FactorTerm:
    """One factor in a squarefree-and-rational-roots decomposition."""

    __slots__ = ("factor", "multiplicity", "root")

    def __init__(self, factor: Poly, multiplicity: int, root: Fraction | None):
        self.factor = factor
        self.multiplicity = multiplicity
        self.root = root

    def __iter__(self):
        return iter((self.factor, self.multiplicity))

    def __repr__(self):
        return f"FactorTerm({self.factor}, {self.multiplicity}, root={self.root})"


def squarefree_and_rational_roots(p: Poly) -> list[FactorTerm]:
    """Squarefree split with every linear factor fully extracted over Q.

    The product of factor^multiplicity equals p up to a constant; non-linear
    factors are squarefree, pairwise coprime and have no rational roots.
    """
    out: list[FactorTerm] = []
    for g, m in squarefree_decomposition(p):
        rem = g
        for r in _rational_roots_squarefree(g):
            lin = Poly.from_terms({1: 1, 0: -r})
            rem = rem.exact_div(lin)
            out.append(FactorTerm(lin, m, r))
        if rem.degree > 0:
            out.append(FactorTerm(rem.monic(), m, None))
    out.sort(key=lambda t: (t.root is None, t.root if t.root is not None else Fraction(0), t.factor.degree))
    return out
