"""PSL(2,p) and PGL(2,p) on the projective line, and orbits on k-subsets.

Points are indexed as in the extended QR codes: index 0 is infinity and
index ``i + 1`` is the residue ``i``.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from .field import is_prime
from .qrcode import GuardError, LinearCode

MAX_SUBSETS = 10**6
MAX_GROUP_ORDER = 10**5

Perm = tuple  # images: perm[i] is the image of point i


def compose(a: Perm, b: Perm) -> Perm:
    """``a`` then ``b``."""
    return tuple(b[x] for x in a)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


def apply_to_mask(perm: Perm, mask: int) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def permute_masks(perm: Perm, masks: np.ndarray) -> np.ndarray:
    out = np.zeros_like(masks)
    for i, j in enumerate(perm):
        out |= ((masks >> i) & 1) << j
    return out


def mask_of(subset) -> int:
    m = 0
    for i in subset:
        m |= 1 << i
    return m


def subset_of(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def k_subset_masks(n: int, k: int) -> np.ndarray:
    """All k-subsets of range(n) as masks, in lexicographic order of sorted tuples."""
    if comb(n, k) > MAX_SUBSETS:
        raise GuardError(f"C({n},{k}) exceeds the subset guard {MAX_SUBSETS}")
    return np.array([mask_of(c) for c in itertools.combinations(range(n), k)], dtype=np.int64)


@dataclass(eq=False)
class PermutationGroup:
    degree: int
    generators: list
    name: str = ""

    def __post_init__(self):
        self.generators = [tuple(g) for g in self.generators]
        for g in self.generators:
            if sorted(g) != list(range(self.degree)):
                raise ValueError(f"not a permutation of {self.degree} points: {g}")

    def __repr__(self):
        return f"PermutationGroup({self.name or '?'}, degree={self.degree}, {len(self.generators)} generators)"

    @cached_property
    def elements(self) -> list:
        """Closure of the generators by breadth-first products."""
        e = identity(self.degree)
        seen = {e}
        queue = deque([e])
        while queue:
            a = queue.popleft()
            for g in self.generators:
                b = compose(a, g)
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
                    if len(seen) > MAX_GROUP_ORDER:
                        raise GuardError(f"group order exceeds {MAX_GROUP_ORDER}")
        return sorted(seen)

    @property
    def order(self) -> int:
        return len(self.elements)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_dict(cls, d: dict, name: str = "") -> PermutationGroup:
        return cls(d["degree"], d["generators"], name)

    def dumps(self) -> str:
        return json.dumps(self.to_dict())


def trivial_group(n: int) -> PermutationGroup:
    return PermutationGroup(n, [], "trivial")


def symmetric_group(n: int) -> PermutationGroup:
    gens = []
    if n >= 2:
        gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return PermutationGroup(n, gens, f"S{n}")


def _projective_map(p: int, f) -> Perm:
    """Permutation of {inf, 0..p-1} (indices 0, 1..p) induced by ``f`` on labels."""
    def idx(y):
        return 0 if y is None else y + 1
    labels = [None] + list(range(p))
    return tuple(idx(f(y)) for y in labels)


def _least_primitive_root(p: int) -> int:
    from .field import prime_factors
    rs = prime_factors(p - 1)
    return next(g for g in range(2, p) if all(pow(g, (p - 1) // r, p) != 1 for r in rs))


def _psl2_generators(p: int) -> list:
    def shift(y):
        return None if y is None else (y + 1) % p

    def neg_inv(y):
        if y is None:
            return 0
        if y == 0:
            return None
        return -pow(y, -1, p) % p

    return [_projective_map(p, shift), _projective_map(p, neg_inv)]


def _check_prime(p):
    if p < 3 or not is_prime(p) or p > 23:
        raise ValueError(f"p must be an odd prime <= 23, got {p}")


def psl2(p: int) -> PermutationGroup:
    _check_prime(p)
    G = PermutationGroup(p + 1, _psl2_generators(p), f"PSL2({p})")
    if G.order != p * (p * p - 1) // 2:
        raise AssertionError(f"|PSL2({p})| = {G.order}")
    return G


def pgl2(p: int) -> PermutationGroup:
    _check_prime(p)
    g = _least_primitive_root(p)

    def scale(y):
        return None if y is None else g * y % p

    G = PermutationGroup(p + 1, _psl2_generators(p) + [_projective_map(p, scale)], f"PGL2({p})")
    if G.order != p * (p * p - 1):
        raise AssertionError(f"|PGL2({p})| = {G.order}")
    return G


@dataclass
class SubsetOrbitPartition:
    n: int
    k: int
    representatives: list  # sorted index tuples, lexicographically least in their orbit
    orbit_sizes: list
    membership: dict  # mask -> orbit index

    @property
    def num_orbits(self) -> int:
        return len(self.representatives)

    def orbit_masks(self, j: int) -> list:
        return [m for m, o in self.membership.items() if o == j]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "representatives": [list(r) for r in self.representatives],
            "orbit_sizes": self.orbit_sizes,
        }


def orbits_on_k_subsets(G: PermutationGroup, k: int) -> SubsetOrbitPartition:
    n = G.degree
    all_masks = k_subset_masks(n, k).tolist()
    raw = {}
    orbits = []
    for start in all_masks:
        if start in raw:
            continue
        j = len(orbits)
        raw[start] = j
        orbit = [start]
        queue = deque([start])
        while queue:
            m = queue.popleft()
            for g in G.generators:
                im = apply_to_mask(g, m)
                if im not in raw:
                    raw[im] = j
                    orbit.append(im)
                    queue.append(im)
        orbits.append(orbit)
    # all_masks is lexicographic, so each orbit's first-visited mask is its least member
    reps = [subset_of(o[0]) for o in orbits]
    return SubsetOrbitPartition(n, k, reps, [len(o) for o in orbits], raw)


def count_orbits_burnside(G: PermutationGroup, k: int) -> int:
    """Number of orbits on k-subsets, averaging fixed-subset counts over all elements."""
    total = 0
    for g in G.elements:
        poly = [1] + [0] * k  # coefficients of prod over cycles of (1 + x^len)
        seen = [False] * G.degree
        for i in range(G.degree):
            if seen[i]:
                continue
            L, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = g[j]
                L += 1
            for d in range(k, L - 1, -1):
                poly[d] += poly[d - L]
        total += poly[k]
    assert total % G.order == 0
    return total // G.order


def is_t_homogeneous(G: PermutationGroup, t: int) -> bool:
    return orbits_on_k_subsets(G, t).num_orbits == 1


def is_t_transitive(G: PermutationGroup, t: int) -> bool:
    n = G.degree
    tuples = list(itertools.permutations(range(n), t))
    if len(tuples) > MAX_SUBSETS:
        raise GuardError("too many ordered tuples")
    start = tuples[0]
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for g in G.generators:
            b = tuple(g[x] for x in a)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == len(tuples)


def preserves_shell_supports(code: LinearCode, perm: Perm) -> bool:
    """True iff ``perm`` maps the support multiset of every shell onto itself."""
    masks = code.table.masks
    # popcount is permutation invariant, so comparing all masks at once is per-shell
    return bool(np.array_equal(np.sort(masks), np.sort(permute_masks(perm, masks))))


def preserves_code(code: LinearCode, perm: Perm) -> bool:
    """True iff the coordinate permutation maps the code onto itself."""
    G = code.generator_matrix
    moved = np.zeros_like(G)
    moved[:, list(perm)] = G
    return all(code.contains(row) for row in moved)


def admissible_symmetry_group(code: LinearCode, p: int | None = None) -> PermutationGroup:
    """A group certified to preserve every shell's block multiset.

    Tries PSL(2,p); falls back to its subgroup of genuine code automorphisms,
    then to the trivial group.
    """
    n = code.n
    p = n - 1 if p is None else p
    try:
        G = psl2(p)
    except ValueError:
        return trivial_group(n)
    if all(preserves_shell_supports(code, g) for g in G.generators):
        G.name = f"PSL2({p}) certified"
        return G
    autos = [g for g in G.elements if g != identity(n) and preserves_code(code, g)]
    if autos:
        return PermutationGroup(n, autos, f"Aut subgroup of PSL2({p})")
    return trivial_group(n)
