"""Exact rational row reduction (sparse-friendly, Fraction entries)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def rref(rows, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    M = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        lead = M[r][c]
        if lead != 1:
            M[r] = [x / lead for x in M[r]]
        nz = [j for j, x in enumerate(M[r]) if x != 0]
        for i in range(len(M)):
            if i != r:
                f = M[i][c]
                if f != 0:
                    row_i = M[i]
                    for j in nz:
                        row_i[j] -= f * M[r][j]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column in increasing order."""
    R, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def primitive_integer(v) -> list[int]:
    """Scale a rational vector to integers with gcd 1 and a positive first nonzero entry."""
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    return [-x for x in ints] if first < 0 else ints
