"""Exact arithmetic substrate: rationals, polynomials, rational functions,
quadratic algebraic numbers, integration and linear solving."""

from fractions import Fraction as Rat

from .algnum import AlgNum, prod_algnum
from .integrate import AlgPoly, IntegralForm, LogTerm, integrate_rational
from .linsolve import LinSolveResult, homogeneous_nullvector, solve_linear
from .poly import (
    FactorTerm,
    Poly,
    poly_gcd,
    poly_xgcd,
    squarefree_and_rational_roots,
    squarefree_decomposition,
)
from .ratfn import RatFn, compose, diff, exponent_support_gcd, substitute_power_root

__all__ = [
    "Rat",
    "AlgNum",
    "prod_algnum",
    "AlgPoly",
    "IntegralForm",
    "LogTerm",
    "integrate_rational",
    "LinSolveResult",
    "homogeneous_nullvector",
    "solve_linear",
    "FactorTerm",
    "Poly",
    "poly_gcd",
    "poly_xgcd",
    "squarefree_and_rational_roots",
    "squarefree_decomposition",
    "RatFn",
    "compose",
    "diff",
    "exponent_support_gcd",
    "substitute_power_root",
]
