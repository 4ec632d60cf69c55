"""Exact dense linear solving over the rationals.

solve_linear gives the full classification (unique / parametric / inconsistent)
by fraction-free elimination. For the large homogeneous systems arising in
rational-function decomposition there is a modular fast path that reconstructs
one nullspace vector and verifies it exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import _prime_pool


@dataclass
class LinSolveResult:
    kind: str  # "unique" | "parametric" | "inconsistent"
    solution: list[Fraction] | None  # a particular solution when consistent
    nullspace: list[list[Fraction]]  # basis of the homogeneous solution space
    rank: int


def _scale_rows(matrix, rhs):
    rows = []
    for i, row in enumerate(matrix):
        fr = [Fraction(v) for v in row] + [Fraction(rhs[i])]
        den = 1
        for v in fr:
            den = den * v.denominator // math.gcd(den, v.denominator)
        rows.append([int(v * den) for v in fr])
    return rows


def solve_linear(matrix, rhs) -> LinSolveResult:
    """Exact Gaussian elimination (fraction-free forward pass) with classification."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    rows = _scale_rows(matrix, rhs)
    pivots: list[tuple[int, int]] = []  # (row, col)
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        for i in range(m):
            if i != r and rows[i][c]:
                ri = rows[i]
                a, b = pr[c], ri[c]
                g = math.gcd(a, b)
                fa, fb = a // g, b // g
                for j in range(n + 1):
                    ri[j] = ri[j] * fa - pr[j] * fb
                g2 = 0
                for v in ri:
                    g2 = math.gcd(g2, v)
                    if g2 == 1:
                        break
                if g2 > 1:
                    for j in range(n + 1):
                        ri[j] //= g2
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    rank = len(pivots)
    for i in range(rank, m):
        if rows[i][n]:
            return LinSolveResult("inconsistent", None, [], rank)
    pivot_cols = {c: i for i, c in pivots}
    free_cols = [c for c in range(n) if c not in pivot_cols]
    solution = [Fraction(0)] * n
    for c, i in pivot_cols.items():
        solution[c] = Fraction(rows[i][n], rows[i][c])
    nullspace = []
    for fc in free_cols:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for c, i in pivot_cols.items():
            vec[c] = Fraction(-rows[i][fc], rows[i][c])
        nullspace.append(vec)
    kind = "unique" if not free_cols else "parametric"
    return LinSolveResult(kind, solution, nullspace, rank)


# ---------------------------------------------------------------------------
# modular nullspace for big homogeneous systems
# ---------------------------------------------------------------------------


def _rational_reconstruct(c: int, m: int) -> Fraction | None:
    """Wang reconstruction of c mod m into n/d with |n|, d <= sqrt(m/2)."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, c % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r1 == 0 or abs(s1) > bound or math.gcd(r1, abs(s1)) != 1:
        return None
    if s1 < 0:
        return Fraction(-r1, -s1)
    return Fraction(r1, s1)


def _nullvector_mod_p(rows: list[list[int]], n: int, p: int):
    """(vector, pivot column tuple) mod p with the last free column set to 1,
    or None when the system has full column rank mod p."""
    mat = [[v % p for v in row] for row in rows]
    pivot_cols: dict[int, int] = {}
    r = 0
    m = len(mat)
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [v * inv % p for v in mat[r]]
        for i in range(m):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivot_cols[c] = r
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivot_cols]
    if not free:
        return None
    fc = free[-1]
    vec = [0] * n
    vec[fc] = 1
    for c, i in pivot_cols.items():
        vec[c] = (-mat[i][fc]) % p
    return vec, tuple(sorted(pivot_cols))


def homogeneous_nullvector(matrix) -> list[Fraction] | None:
    """A nonzero exact rational nullspace vector of A (homogeneous), or None.

    Modular images with CRT and rational reconstruction; the reconstructed
    vector is verified exactly against A, so a returned vector is always
    correct. A full-rank image mod any prime proves the nullspace is trivial.
    """
    m = len(matrix)
    if m == 0:
        return None
    n = len(matrix[0])
    rows = []
    for row in matrix:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // math.gcd(den, v.denominator)
        rows.append([int(v * den) for v in fr])

    acc: list[int] | None = None
    acc_pivots: tuple | None = None
    mod = 1
    for p in _prime_pool()[:80]:
        got = _nullvector_mod_p(rows, n, p)
        if got is None:
            return None  # full rank mod p implies full rank over Q
        vec, piv = got
        if acc is None or piv != acc_pivots:
            # unlucky primes understate the rank; the larger pivot set wins
            if acc is not None and len(piv) < len(acc_pivots):
                continue
            acc, acc_pivots, mod = vec, piv, p
        else:
            inv = pow(mod % p, -1, p)
            acc = [a + mod * ((b - a) % p * inv % p) for a, b in zip(acc, vec)]
            mod *= p
        cand = [_rational_reconstruct(v, mod) for v in acc]
        if any(c is None for c in cand):
            continue
        if all(c == 0 for c in cand):
            continue
        ok = True
        for row in rows:
            s = sum(Fraction(a) * c for a, c in zip(row, cand) if a)
            if s != 0:
                ok = False
                break
        if ok:
            return cand  # type: ignore[return-value]
    return None
