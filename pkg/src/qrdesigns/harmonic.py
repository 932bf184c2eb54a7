"""Harmonic functions on k-subsets and harmonic weight enumerators.

A function f on k-subsets is harmonic when the differentiation operator
``gamma`` (summing f over the k-subsets containing each (k-1)-subset)
annihilates it.  Sums of ``f~`` over the blocks of a shell vanish for every
harmonic f of degree 1..t exactly when the shell is a t-design; restricting
to f invariant under a group that preserves the blocks loses nothing.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, lcm

import numpy as np

from . import linalg
from .group import PermutationGroup, k_subset_masks, mask_of, orbits_on_k_subsets, preserves_shell_supports, subset_of
from .qrcode import LinearCode


class UncertifiedGroupError(ValueError):
    pass


@dataclass
class DiscreteFunction:
    n: int
    k: int
    values: dict = dc_field(default_factory=dict)  # k-subset mask -> Fraction; absent means 0

    def __call__(self, z) -> Fraction:
        m = z if isinstance(z, int) else mask_of(z)
        return self.values.get(m, Fraction(0))

    def nonzero(self) -> dict:
        return {m: v for m, v in self.values.items() if v != 0}

    def is_zero(self) -> bool:
        return not self.nonzero()


@dataclass
class HarmonicFunction(DiscreteFunction):
    orbit_values: list = dc_field(default_factory=list)


def indicator(n: int, subset) -> DiscreteFunction:
    return DiscreteFunction(n, len(subset), {mask_of(subset): Fraction(1)})


def gamma(f: DiscreteFunction) -> DiscreteFunction:
    """(gamma f)(y) = sum of f(z) over k-subsets z containing the (k-1)-subset y."""
    if f.k == 0:
        raise ValueError("gamma is undefined on degree 0")
    out: dict = {}
    for z, v in f.values.items():
        if v == 0:
            continue
        rest = z
        while rest:
            bit = rest & -rest
            rest ^= bit
            y = z ^ bit
            out[y] = out.get(y, Fraction(0)) + v
    return DiscreteFunction(f.n, f.k - 1, {y: v for y, v in out.items() if v != 0})


def is_harmonic(f: DiscreteFunction) -> bool:
    return f.k == 0 or gamma(f).is_zero()


def inclusion_rows(n: int, k: int) -> list[list[int]]:
    """Matrix of gamma on degree k: rows (k-1)-subsets, columns k-subsets."""
    cols = {int(m): j for j, m in enumerate(k_subset_masks(n, k))}
    rows = []
    for y in itertools.combinations(range(n), k - 1):
        ym = mask_of(y)
        row = [0] * len(cols)
        for i in range(n):
            if not ym >> i & 1:
                row[cols[ym | 1 << i]] = 1
        rows.append(row)
    return rows


def harmonic_dimension(n: int, k: int) -> int:
    """dim Harm_k by an exact rank computation."""
    if k == 0:
        return 1
    return comb(n, k) - linalg.rank(inclusion_rows(n, k), comb(n, k))


def invariant_harmonic_basis(G: PermutationGroup, n: int, k: int) -> list[HarmonicFunction]:
    """Integer-valued basis of the G-invariant harmonic functions of degree k."""
    if k < 1:
        raise ValueError("degree must be at least 1")
    part = orbits_on_k_subsets(G, k)
    r = part.num_orbits
    rows = set()
    for y in itertools.combinations(range(n), k - 1):
        ym = mask_of(y)
        row = [0] * r
        for i in range(n):
            if not ym >> i & 1:
                row[part.membership[ym | 1 << i]] += 1
        rows.add(tuple(row))
    basis = []
    for vec in linalg.nullspace(sorted(rows), r):
        ints = linalg.primitive_integer(vec)
        values = {m: Fraction(ints[j]) for m, j in part.membership.items() if ints[j]}
        basis.append(HarmonicFunction(n, k, values, orbit_values=ints))
    return basis


def f_tilde(f: DiscreteFunction, u) -> Fraction:
    """Sum of f over the k-subsets of u."""
    um = u if isinstance(u, int) else mask_of(u)
    return sum((v for z, v in f.values.items() if z & um == z), Fraction(0))


def harmonic_weight_enumerator(code: LinearCode, f: DiscreteFunction) -> dict[int, Fraction]:
    """Weight l -> sum of f~(supp c) over codewords c of weight l (zeros omitted)."""
    table = code.table
    umasks, counts = np.unique(table.masks, return_counts=True)
    weights = np.bitwise_count(umasks).astype(np.int64)
    vals = f.nonzero()
    den = lcm(*(v.denominator for v in vals.values())) if vals else 1
    ft = np.zeros(len(umasks), dtype=np.int64)
    for z, v in vals.items():
        ft += int(v * den) * ((umasks & z) == z)
    out = {}
    for w in np.unique(weights):
        s = int((ft[weights == w] * counts[weights == w]).sum())
        if s:
            out[int(w)] = Fraction(s, den)
    return out


def certify(code: LinearCode, G: PermutationGroup) -> None:
    if not all(preserves_shell_supports(code, g) for g in G.generators):
        raise UncertifiedGroupError(f"{G.name or 'group'} does not preserve the shell supports of {code}")


@dataclass
class HarmonicVerdict:
    weight: int
    is_design: bool
    witness: tuple | None = None  # (degree, basis index, nonzero coefficient)


def harmonic_design_test(code: LinearCode, G: PermutationGroup, t: int) -> dict[int, HarmonicVerdict]:
    certify(code, G)
    enumerators = []
    for k in range(1, t + 1):
        for i, f in enumerate(invariant_harmonic_basis(G, code.n, k)):
            enumerators.append((k, i, harmonic_weight_enumerator(code, f)))
    out = {}
    for w in sorted(code.weight_distribution):
        if w == 0:
            continue
        witness = next(((k, i, e[w]) for k, i, e in enumerators if e.get(w, 0) != 0), None)
        out[w] = HarmonicVerdict(w, witness is None, witness)
    return out


def harmonic_report(code: LinearCode, G: PermutationGroup, k: int) -> dict:
    certify(code, G)
    basis = invariant_harmonic_basis(G, code.n, k)
    part = orbits_on_k_subsets(G, k)
    return {
        "k": k,
        "group_id": G.name,
        "orbit_representatives": [list(r) for r in part.representatives],
        "basis": [{"orbit_values": f.orbit_values} for f in basis],
        "enumerators": [
            [
                {"weight": w, "numerator": c.numerator, "denominator": c.denominator}
                for w, c in sorted(harmonic_weight_enumerator(code, f).items())
            ]
            for f in basis
        ],
    }


def render_enumerator(n: int, coeffs: dict) -> str:
    parts = []
    for w in sorted(coeffs):
        c = coeffs[w]
        mono = "".join(s for s in (_pw("x", n - w), _pw("y", w)) if s)
        parts.append(f"{c}{mono}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _pw(v, e):
    return "" if e == 0 else (v if e == 1 else f"{v}^{{{e}}}")


def to_json(report: dict) -> str:
    return json.dumps(report, indent=1)
