"""Exact integration of rational functions.

The antiderivative is returned as a rational part (Hermite reduction plus the
polynomial antiderivative) and log terms whose residues are rational or
quadratic algebraic numbers. Residues needing a larger number field are left
as an explicit unevaluated integrand, so differentiating the result always
reproduces the input exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algnum import AlgNum
from .poly import Poly, poly_xgcd, squarefree_and_rational_roots, squarefree_decomposition
from .ratfn import RatFn


@dataclass(frozen=True)
class AlgPoly:
    """Low-degree polynomial with quadratic-algebraic coefficients (log arguments)."""

    coeffs: tuple[AlgNum, ...]  # coeffs[i] multiplies x^i

    @staticmethod
    def from_poly(p: Poly) -> "AlgPoly":
        return AlgPoly(tuple(AlgNum.from_rational(p.coeff(i)) for i in range(p.degree + 1)))

    @staticmethod
    def linear_root(root: AlgNum) -> "AlgPoly":
        """x - root."""
        return AlgPoly((-root, AlgNum.from_rational(1)))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def to_poly(self) -> Poly:
        return Poly.from_terms({i: c.as_rational() for i, c in enumerate(self.coeffs)})

    def conjugate(self) -> "AlgPoly":
        return AlgPoly(tuple(c.conjugate() for c in self.coeffs))

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c.to_complex()
        return acc

    def __str__(self) -> str:
        parts = []
        one = AlgNum.from_rational(1)
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not xs:
                parts.append(f"({c})")
            elif c == one:
                parts.append(xs)
            else:
                parts.append(f"({c})*{xs}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LogTerm:
    residue: AlgNum
    argument: AlgPoly


@dataclass
class IntegralForm:
    """Antiderivative of `integrand` as rational_part + sum residue*log(argument)
    + integral of unevaluated_remainder."""

    integrand: RatFn
    rational_part: RatFn
    log_terms: list[LogTerm] = field(default_factory=list)
    unevaluated_remainder: RatFn | None = None

    def is_pure_rational(self) -> bool:
        return not self.log_terms and self.unevaluated_remainder is None

    def derivative(self) -> RatFn:
        """Exact derivative; equals the integrand by construction."""
        out = self.rational_part.derivative()
        surd: list[LogTerm] = []
        for t in self.log_terms:
            if t.residue.is_rational() and t.argument.is_rational():
                arg = t.argument.to_poly()
                out = out + RatFn(arg.derivative(), arg) * t.residue.as_rational()
            else:
                surd.append(t)
        out = out + _conjugate_pair_derivative(surd)
        if self.unevaluated_remainder is not None:
            out = out + self.unevaluated_remainder
        return out

    def __str__(self) -> str:
        parts = []
        if not self.rational_part.is_zero():
            parts.append(str(self.rational_part))
        for t in self.log_terms:
            parts.append(f"({t.residue})*log({t.argument})")
        if self.unevaluated_remainder is not None:
            parts.append(f"Int({self.unevaluated_remainder})")
        return " + ".join(parts) if parts else "0"


def _conjugate_pair_derivative(terms: list[LogTerm]) -> RatFn:
    """Sum of residue*argument'/argument over a conjugate-closed set of surd terms."""
    total = RatFn.zero()
    used = [False] * len(terms)
    for i, t in enumerate(terms):
        if used[i]:
            continue
        mate = None
        for j in range(i + 1, len(terms)):
            if not used[j] and terms[j].residue == t.residue.conjugate() \
                    and terms[j].argument == t.argument.conjugate():
                mate = j
                break
        if mate is None:
            raise ArithmeticError("unpaired surd log term")
        used[i] = used[mate] = True
        u = terms[mate]
        a1, a2 = t.argument, u.argument
        if a1.degree() != 1 or a2.degree() != 1:
            raise ArithmeticError("surd log arguments must be linear")
        # residue1/arg1 + residue2/arg2 = (res1*arg2 + res2*arg1)/(arg1*arg2), rational
        num_c = [t.residue * a2.coeffs[k] + u.residue * a1.coeffs[k] for k in range(2)]
        den_c = [
            a1.coeffs[0] * a2.coeffs[0],
            a1.coeffs[0] * a2.coeffs[1] + a1.coeffs[1] * a2.coeffs[0],
            a1.coeffs[1] * a2.coeffs[1],
        ]
        num = Poly.from_terms({k: c.as_rational() for k, c in enumerate(num_c)})
        den = Poly.from_terms({k: c.as_rational() for k, c in enumerate(den_c)})
        total = total + RatFn(num, den)
    return total


def _partial_fraction_components(a: Poly, factors: list[Poly]) -> list[Poly]:
    """Split a/prod(factors) into components a_i/f_i (f_i pairwise coprime, monic)."""
    prod = Poly.one()
    for f in factors:
        prod = prod * f
    comps = []
    for f in factors:
        cof = prod.exact_div(f)
        g, s, _ = poly_xgcd(cof, f)
        if g.degree != 0:
            raise ArithmeticError("factors not coprime in partial fractions")
        inv_cof = s * (Fraction(1) / g.coeff(0))
        _, ai = (a * inv_cof).divmod(f)
        comps.append(ai)
    return comps


def _poly_antiderivative(p: Poly) -> Poly:
    if p.is_zero():
        return Poly.zero()
    return Poly.from_terms({e + 1: c / (e + 1) for e, c in p.terms()})


def integrate_rational(w: RatFn) -> IntegralForm:
    """Exact antiderivative of a rational function."""
    if w.is_zero():
        return IntegralForm(w, RatFn.zero())
    polypart, num = w.num.divmod(w.den)
    rat = RatFn.from_poly(_poly_antiderivative(polypart))
    den = w.den
    if num.is_zero():
        return IntegralForm(w, rat)

    # Hermite reduction per squarefree component: repeatedly integrate by
    # parts against q'/q^k until only simple poles remain.
    simple = RatFn.zero()
    sqf = squarefree_decomposition(den)
    factors = [q**k for q, k in sqf]
    comps = _partial_fraction_components(num, factors)
    for (q, k), a in zip(sqf, comps):
        while k > 1:
            _, s, t = poly_xgcd(q, q.derivative())  # s*q + t*q' = 1
            a_s = a * s
            a_t = a * t
            rat = rat + RatFn(a_t * Fraction(-1, k - 1), q ** (k - 1))
            a = a_s + a_t.derivative() * Fraction(1, k - 1)
            k -= 1
        simple = simple + RatFn(a, q)

    log_terms: list[LogTerm] = []
    unevaluated: RatFn | None = None
    if not simple.is_zero():
        extra_poly, snum = simple.num.divmod(simple.den)
        rat = rat + RatFn.from_poly(_poly_antiderivative(extra_poly))
        sden = simple.den
        if not snum.is_zero() and sden.degree > 0:
            terms = squarefree_and_rational_roots(sden)
            pf = _partial_fraction_components(snum, [t.factor for t in terms])
            rational_groups: dict[Fraction, Poly] = {}
            for t, af in zip(terms, pf):
                f = t.factor
                if af.is_zero():
                    continue
                if f.degree == 1:
                    res = af.constant_value()
                    rational_groups[res] = rational_groups.get(res, Poly.one()) * f
                elif f.degree == 2:
                    r1, r2 = AlgNum.quadratic_roots(f.coeff(1), f.coeff(0))
                    fp = f.derivative()
                    res1 = af.eval_algnum(r1) / fp.eval_algnum(r1)
                    res2 = af.eval_algnum(r2) / fp.eval_algnum(r2)
                    if res1.is_rational() and res1 == res2:
                        key = res1.as_rational()
                        rational_groups[key] = rational_groups.get(key, Poly.one()) * f
                    else:
                        log_terms.append(LogTerm(res1, AlgPoly.linear_root(r1)))
                        log_terms.append(LogTerm(res2, AlgPoly.linear_root(r2)))
                else:
                    piece = RatFn(af, f)
                    unevaluated = piece if unevaluated is None else unevaluated + piece
            rat_terms = [
                LogTerm(AlgNum.from_rational(res), AlgPoly.from_poly(arg.monic()))
                for res, arg in sorted(rational_groups.items())
            ]
            log_terms = rat_terms + log_terms

    return IntegralForm(w, rat, log_terms, unevaluated)
