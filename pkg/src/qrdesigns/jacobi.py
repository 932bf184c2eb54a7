"""Jacobi polynomials J_{C,T}(w, z, x, y) by exhaustive enumeration.

For a codeword c and a coordinate subset T, ``m1`` counts nonzero
coordinates of c inside T and ``n1`` those outside; ``m0 = |T| - m1`` and
``n0 = n - |T| - n1``.  The monomial is ``w^m0 z^m1 x^n0 y^n1``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .group import PermutationGroup, k_subset_masks, mask_of, orbits_on_k_subsets, subset_of
from .parallel import map_chunks
from .qrcode import GuardError, LinearCode

MAX_ALL_SUBSETS = 10**4
BATCH = 32


@dataclass(frozen=True)
class JacobiPolynomial:
    n: int
    t: int
    coefficients: tuple  # sorted ((m1, n1), count) pairs, zero counts omitted

    @classmethod
    def from_counts(cls, n: int, t: int, counts: dict) -> JacobiPolynomial:
        return cls(n, t, tuple(sorted((k, int(v)) for k, v in counts.items() if v)))

    @cached_property
    def as_dict(self) -> dict:
        return dict(self.coefficients)

    def coefficient(self, m1: int, n1: int) -> int:
        return self.as_dict.get((m1, n1), 0)

    def total(self) -> int:
        """J(1,1,1,1)."""
        return sum(self.as_dict.values())

    def specialize(self) -> dict[int, int]:
        """Substitute w -> x, z -> y: the weight distribution."""
        out: dict[int, int] = {}
        for (m1, n1), c in self.coefficients:
            out[m1 + n1] = out.get(m1 + n1, 0) + c
        return dict(sorted(out.items()))

    def terms(self):
        """(m0, m1, n0, n1, count) in display order: m0 descending, then n0 descending."""
        rows = [(self.t - m1, m1, self.n - self.t - n1, n1, c) for (m1, n1), c in self.coefficients]
        return sorted(rows, key=lambda r: (-r[0], -r[2]))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "terms": [
                {"m0": self.t - m1, "m1": m1, "n0": self.n - self.t - n1, "n1": n1, "count": c}
                for (m1, n1), c in self.coefficients
            ],
        }

    def render(self) -> str:
        out = []
        for m0, m1, n0, n1, c in self.terms():
            mono = "".join(_power(v, e) for v, e in (("w", m0), ("x", n0), ("y", n1), ("z", m1)))
            out.append((str(c) if c != 1 or not mono else "") + mono)
        return " + ".join(out) if out else "0"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{{{e}}}"


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*((?:[wxyz](?:\^\{?\d+\}?)?\s*)*)")
_VAR = re.compile(r"([wxyz])(?:\^\{?(\d+)\}?)?")


def parse_monomials(text: str) -> list[tuple[int, dict]]:
    """Parse a sum like ``3 w^{2} x y^10 z - 4x^5`` into (coefficient, {var: exp})."""
    text = text.replace(" ", "")
    out = []
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse near {text[pos:pos + 20]!r}")
        sign, digits, vars_ = m.groups()
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        exps = {}
        for v, e in _VAR.findall(vars_):
            exps[v] = exps.get(v, 0) + (int(e) if e else 1)
        out.append((coeff, exps))
        pos = m.end()
    return out


def parse_jacobi(text: str, n: int, t: int) -> JacobiPolynomial:
    counts: dict = {}
    for c, e in parse_monomials(text):
        m0, m1, n0, n1 = (e.get(v, 0) for v in "wzxy")
        if m0 + m1 != t or n0 + n1 != n - t:
            raise ValueError(f"inhomogeneous term {c} {e} for n={n}, t={t}")
        counts[(m1, n1)] = counts.get((m1, n1), 0) + c
    return JacobiPolynomial.from_counts(n, t, counts)


# --- computation ---------------------------------------------------------


def _jacobi_batch(masks: np.ndarray, weights: np.ndarray, n: int, t: int, T_masks: np.ndarray) -> np.ndarray:
    """Count table [T, m1, weight] for a batch of subsets."""
    width = (t + 1) * (n + 1)
    m1 = np.bitwise_count(T_masks[:, None] & masks[None, :]).astype(np.int64)
    keys = m1 * (n + 1) + weights[None, :] + np.arange(len(T_masks))[:, None] * width
    return np.bincount(keys.ravel(), minlength=len(T_masks) * width).reshape(len(T_masks), t + 1, n + 1)


def jacobi_tables(code: LinearCode, subsets, threads: int | None = None) -> list[JacobiPolynomial]:
    """Jacobi polynomials for many subsets (index tuples), in input order."""
    table = code.table
    n = code.n
    subsets = [tuple(T) for T in subsets]
    if not subsets:
        return []
    t = len(subsets[0])
    for T in subsets:
        if len(T) != t or not all(0 <= i < n for i in T) or len(set(T)) != t:
            raise ValueError(f"bad subset {T} for length {n}")
    T_masks = np.array([mask_of(T) for T in subsets], dtype=np.int64)
    chunks = [T_masks[i:i + BATCH] for i in range(0, len(T_masks), BATCH)]
    results = map_chunks(lambda ch: _jacobi_batch(table.masks, table.weights, n, t, ch), chunks, threads)
    out = []
    for block in results:
        for arr in block:
            counts = {}
            for m1, w in zip(*np.nonzero(arr)):
                counts[(int(m1), int(w - m1))] = int(arr[m1, w])
            out.append(JacobiPolynomial.from_counts(n, t, counts))
    return out


def jacobi_polynomial(code: LinearCode, T) -> JacobiPolynomial:
    return jacobi_tables(code, [tuple(T)])[0]


@dataclass
class JacobiClass:
    polynomial: JacobiPolynomial
    subsets: list  # index tuples with this polynomial, sorted


def jacobi_distinct(
    code: LinearCode,
    t: int,
    group: PermutationGroup | None = None,
    threads: int | None = None,
) -> list[JacobiClass]:
    """Group t-subsets by Jacobi polynomial.

    With ``group`` given, only orbit representatives are enumerated and each
    polynomial is assigned to every member of the representative's orbit; the
    group must preserve the code's shell supports for this to be sound.
    """
    n = code.n
    if group is None:
        masks = k_subset_masks(n, t)
        if len(masks) > MAX_ALL_SUBSETS:
            raise GuardError(f"C({n},{t}) = {len(masks)} subsets exceeds {MAX_ALL_SUBSETS}")
        subsets = [subset_of(int(m)) for m in masks]
        polys = jacobi_tables(code, subsets, threads)
        pairs = list(zip(polys, subsets))
    else:
        part = orbits_on_k_subsets(group, t)
        polys = jacobi_tables(code, part.representatives, threads)
        pairs = [(polys[j], subset_of(m)) for m, j in part.membership.items()]
    classes: dict = {}
    for poly, T in pairs:
        classes.setdefault(poly, []).append(T)
    return [JacobiClass(p, sorted(Ts)) for p, Ts in sorted(classes.items(), key=lambda kv: kv[0].coefficients)]


@dataclass
class ShellVerdict:
    weight: int
    is_design: bool
    lam: int | None
    values: list  # distinct coefficients observed at (m1=t, n1=weight-t)


def jacobi_design_test(
    code: LinearCode,
    t: int,
    group: PermutationGroup | None = None,
    classes: list[JacobiClass] | None = None,
) -> dict[int, ShellVerdict]:
    """Shell C_l is a t-design iff the z^t x^(n-l) y^(l-t) coefficient is T-independent."""
    if classes is None:
        classes = jacobi_distinct(code, t, group)
    out = {}
    for w in sorted(code.weight_distribution):
        if w == 0:
            continue
        values = sorted({c.polynomial.coefficient(t, w - t) for c in classes})
        ok = len(values) == 1
        out[w] = ShellVerdict(w, ok, values[0] if ok else None, values)
    return out


def classes_to_json(classes: list[JacobiClass]) -> str:
    return json.dumps(
        [{"subset_count": len(c.subsets), "first_subset": list(c.subsets[0]), **c.polynomial.to_dict()} for c in classes],
        indent=1,
    )
