"""Quadratic residue codes, their extensions, and exhaustive codeword tables."""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .field import GF, FieldError, Poly, is_prime, make_extension, make_field, multiplicative_order, pth_root_of_unity

MAX_CODEWORDS = 1 << 24
INFINITY = "inf"


class GuardError(RuntimeError):
    """A computation was refused because it exceeds a size guard."""


class CodeError(ValueError):
    pass


# --- linear algebra over GF(q) -------------------------------------------


def rref(F: GF, rows) -> np.ndarray:
    """Reduced row-echelon form over ``F``; zero rows are dropped."""
    M = [list(map(int, r)) for r in rows]
    if not M:
        return np.zeros((0, 0), dtype=np.int64)
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return np.array(M[:r], dtype=np.int64).reshape(r, ncols)


def nullspace(F: GF, rows, ncols: int) -> np.ndarray:
    """Basis (as rows) of ``{y : M y = 0}``."""
    R = rref(F, rows) if len(rows) else np.zeros((0, ncols), dtype=np.int64)
    pivots = []
    for row in R:
        pivots.append(int(np.flatnonzero(row)[0]))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(int(row[fcol]))
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), ncols)


# --- codes ---------------------------------------------------------------


@dataclass(frozen=True)
class CodewordTable:
    """All codewords as support bitmasks (bit i = coordinate i) with weights."""

    masks: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return len(self.masks)


@dataclass(eq=False)
class LinearCode:
    field: GF
    generator_matrix: np.ndarray
    coordinate_labels: list = dc_field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        G = rref(self.field, self.generator_matrix)
        if len(G) == 0:
            raise CodeError("zero code")
        self.generator_matrix = G
        if not self.coordinate_labels:
            self.coordinate_labels = list(range(self.n))
        if len(self.coordinate_labels) != self.n:
            raise CodeError("label count does not match length")

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def n(self) -> int:
        return self.generator_matrix.shape[1]

    @property
    def k(self) -> int:
        return self.generator_matrix.shape[0]

    def __repr__(self):
        return f"LinearCode({self.name or 'code'}: [{self.n},{self.k}] over GF({self.q}))"

    def vectors(self) -> np.ndarray:
        """All ``q**k`` codewords, message vectors in lexicographic order."""
        if self.q ** self.k > MAX_CODEWORDS:
            raise GuardError(f"{self.q}^{self.k} codewords exceeds the guard {MAX_CODEWORDS}")
        F = self.field
        add, mul = F.add_table, F.mul_table
        words = np.zeros((1, self.n), dtype=np.int64)
        for row in self.generator_matrix:
            multiples = mul[np.arange(self.q)[:, None], row[None, :]]
            words = add[words[:, None, :], multiples[None, :, :]].reshape(-1, self.n)
        return words

    @cached_property
    def table(self) -> CodewordTable:
        return enumerate_codewords(self)

    @cached_property
    def weight_distribution(self) -> dict[int, int]:
        return weight_distribution(self)

    @cached_property
    def fingerprint(self) -> str:
        wd = json.dumps(sorted(self.weight_distribution.items()))
        return hashlib.sha256(wd.encode()).hexdigest()[:16]

    def contains(self, vec) -> bool:
        G = self.generator_matrix
        return len(rref(self.field, np.vstack([G, np.asarray(vec)[None, :]]))) == self.k

    # --- serialization --------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "modulus": list(self.field.modulus),
            "generator_matrix": self.generator_matrix.tolist(),
            "coordinate_labels": [str(x) for x in self.coordinate_labels],
        }

    @classmethod
    def from_dict(cls, d: dict) -> LinearCode:
        F = make_field(d["q"])
        if list(F.modulus) != list(d["modulus"]):
            raise CodeError(f"modulus {d['modulus']} does not match GF({d['q']}) {list(F.modulus)}")
        G = np.array(d["generator_matrix"], dtype=np.int64)
        labels = [x if x == INFINITY else int(x) for x in d["coordinate_labels"]]
        code = cls(F, G, labels)
        if code.n != d["n"] or code.k != d["k"]:
            raise CodeError("stored n/k disagree with the generator matrix")
        return code

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def loads(cls, s: str) -> LinearCode:
        return cls.from_dict(json.loads(s))


def is_quadratic_residue(q: int, p: int) -> bool:
    """Euler's criterion for ``q`` modulo the odd prime ``p``."""
    return q % p != 0 and pow(q, (p - 1) // 2, p) == 1


def qr_generator_polynomial(q: int, p: int) -> Poly:
    """prod over quadratic residues r of (x - alpha^r), mapped back to GF(q)."""
    if p < 3 or not is_prime(p):
        raise CodeError(f"{p} is not an odd prime")
    F = make_field(q)
    if q % p == 0:
        raise CodeError(f"{p} divides {q}")
    if not is_quadratic_residue(q, p):
        raise CodeError(f"quadratic residue code undefined: {q} is not a quadratic residue mod {p}")
    E = make_extension(F, multiplicative_order(q, p))
    alpha = pth_root_of_unity(E, p)
    g = Poly(E, [1])
    for r in sorted({i * i % p for i in range(1, p)}):
        g = g * Poly(E, [E.neg(E.pow(alpha, r)), 1])
    if E is not F and not all(E.in_base(c) for c in g.coeffs):
        raise FieldError("generator coefficient outside the base field")
    return Poly(F, g.coeffs)


def build_cyclic_code(g: Poly, p: int) -> LinearCode:
    F = g.field
    if not (Poly.x_power_minus_one(F, p) % g).is_zero():
        raise CodeError("generator polynomial does not divide x^p - 1")
    k = p - g.degree
    if k <= 0:
        raise CodeError("generator x^p - 1 gives the zero code")
    rows = np.zeros((k, p), dtype=np.int64)
    for i in range(k):
        rows[i, i:i + g.degree + 1] = g.coeffs
    return LinearCode(F, rows, list(range(p)))


def extend_zero_sum(code: LinearCode, scale: int | None = None) -> LinearCode:
    """Prepend coordinate ``inf`` holding ``scale * sum(c_i)`` (default scale -1)."""
    F = code.field
    s = F.neg(1) if scale is None else scale
    if s == 0:
        raise CodeError("extension scale must be nonzero")
    G = code.generator_matrix
    col = []
    for row in G:
        acc = 0
        for x in row:
            acc = F.add(acc, int(x))
        col.append(F.mul(s, acc))
    ext = np.hstack([np.array(col, dtype=np.int64)[:, None], G])
    return LinearCode(F, ext, [INFINITY] + list(code.coordinate_labels), name=code.name)


def extended_qr_code(q: int, p: int) -> LinearCode:
    code = extend_zero_sum(build_cyclic_code(qr_generator_polynomial(q, p), p))
    code.name = f"XQR(q={q},p={p})"
    return code


def enumerate_codewords(code: LinearCode) -> CodewordTable:
    words = code.vectors()
    bits = np.left_shift(np.int64(1), np.arange(code.n, dtype=np.int64))
    masks = ((words != 0) * bits).sum(axis=1).astype(np.int64)
    return CodewordTable(masks, np.bitwise_count(masks).astype(np.int64))


def weight_distribution(code: LinearCode) -> dict[int, int]:
    counts = np.bincount(code.table.weights, minlength=code.n + 1)
    return {w: int(c) for w, c in enumerate(counts) if c}


def dual_code(code: LinearCode) -> LinearCode:
    H = nullspace(code.field, code.generator_matrix, code.n)
    dual = LinearCode(code.field, H, list(code.coordinate_labels))
    dual.name = f"dual of {code.name}" if code.name else "dual"
    return dual


@dataclass(frozen=True)
class BlockMultiset:
    """Supports of one shell: distinct masks with their multiplicities."""

    v: int
    k: int
    masks: np.ndarray
    counts: np.ndarray

    @property
    def size(self) -> int:
        return int(self.counts.sum())

    def as_counter(self) -> Counter:
        return Counter(dict(zip(self.masks.tolist(), self.counts.tolist())))


def shell_blocks(code: LinearCode, weight: int, distinct: bool = False) -> BlockMultiset:
    t = code.table
    sel = t.masks[t.weights == weight]
    if len(sel) == 0:
        raise CodeError(f"shell of weight {weight} is empty")
    masks, counts = np.unique(sel, return_counts=True)
    if distinct:
        counts = np.ones_like(counts)
    return BlockMultiset(code.n, weight, masks, counts.astype(np.int64))


def nonzero_weights(code: LinearCode) -> list[int]:
    return [w for w in sorted(code.weight_distribution) if w > 0]
