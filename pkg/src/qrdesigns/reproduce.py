"""Named reproduction targets: recompute each published claim and compare."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import reference as ref
from .design import assmus_mattson_max_t, design_report, lambda_from_blocks, verify_design
from .group import (
    admissible_symmetry_group,
    is_t_homogeneous,
    is_t_transitive,
    orbits_on_k_subsets,
    pgl2,
    preserves_shell_supports,
    psl2,
)
from .harmonic import harmonic_design_test, harmonic_weight_enumerator, invariant_harmonic_basis
from .jacobi import jacobi_distinct
from .qrcode import LinearCode, extended_qr_code, shell_blocks


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


@lru_cache(maxsize=None)
def code(q: int, p: int) -> LinearCode:
    return extended_qr_code(q, p)


@lru_cache(maxsize=None)
def report(q: int, p: int, tmax: int = 4):
    return design_report(code(q, p), tmax=tmax)


@lru_cache(maxsize=None)
def distinct_classes(q: int, p: int, t: int):
    return jacobi_distinct(code(q, p), t)


def _shell_checks(q, p, special, mode, lam3):
    rep = report(q, p)
    out = []
    for sh in rep.shells:
        verdicts = sh.modes[mode]
        if sh.complete[mode]:
            out.append(Check(f"C_{sh.weight} complete ({mode})", all(v.is_design for v in verdicts.values()),
                             "every subset of this size occurs equally often; a t-design for all t"))
            continue
        if sh.weight == special:
            v3, v4 = verdicts[3], verdicts[4]
            out.append(Check(f"C_{sh.weight} is 3-({code(q, p).n},{sh.weight},{lam3}) ({mode})",
                             v3.is_design and v3.lam == lam3, f"lambda={v3.lam}, b={v3.b}"))
            out.append(Check(f"C_{sh.weight} not a 4-design ({mode})", not v4.is_design,
                             f"lambda range {v4.lambda_range}"))
        else:
            ok = verdicts[2].is_design and not verdicts[3].is_design
            out.append(Check(f"C_{sh.weight} 2-design, not 3-design ({mode})", ok,
                             f"t=3 range {verdicts[3].lambda_range}"))
    return out


def _delta_s_check(q, p, mode="multiset"):
    d, s = report(q, p).delta_s(mode, exclude_complete=True)
    raw = report(q, p).delta_s(mode, exclude_complete=False)
    return Check(f"(delta, s) = (2, 3) excluding complete shells ({mode})", (d, s) == (2, 3),
                 f"got ({d}, {s}); including complete shells ({raw[0]}, {raw[1]})")


def target_thm11() -> list[Check]:
    out = _shell_checks(3, 13, 10, "multiset", 180)
    lam, integral = lambda_from_blocks(14, 10, 546, 4)
    out.append(Check("4-design lambda for C_10 would be 1260/11", lam == Fraction(1260, 11) and not integral, str(lam)))
    out.append(_delta_s_check(3, 13))
    return out


def target_thm12() -> list[Check]:
    out = _shell_checks(4, 17, 13, "multiset", 18018)
    values = sorted({c.polynomial.coefficient(4, 9) for c in distinct_classes(4, 17, 4)})
    out.append(Check("z^4 x^5 y^9 coefficients over 4-subsets are {12000, 12030}", values == [12000, 12030], str(values)))
    out.append(_delta_s_check(4, 17))
    return out


def target_rem13() -> list[Check]:
    out = _shell_checks(4, 17, 10, "distinct", 315)
    out.append(_delta_s_check(4, 17, "distinct"))
    return out


def _item_groups(published) -> list[list[int]]:
    groups: dict = {}
    for i, j in enumerate(published, 1):
        groups.setdefault(j, []).append(i)
    return sorted(groups.values())


def _jacobi_target(key, q, p, coeff_at=None, coeff_value=None) -> list[Check]:
    published = ref.jacobi_items(key)
    classes = distinct_classes(q, p, ref.tables()[key]["t"])
    mine = [c.polynomial for c in classes]
    out = [
        Check("published items are consistent", all(j.total() == q ** code(q, p).k for j in published),
              f"{len(published)} items, {len(set(published))} distinct"),
        Check("distinct polynomial count", len(mine) == len(set(published)),
              f"{len(mine)} over {sum(len(c.subsets) for c in classes)} subsets"),
        Check("coefficient tables equal the published ones", set(mine) == set(published),
              f"identical published items: {_item_groups(published)}"),
    ]
    if coeff_at is not None:
        out.append(Check(f"coefficient at (m1, n1) = {coeff_at} is {coeff_value} everywhere",
                         {j.coefficient(*coeff_at) for j in mine} == {coeff_value}))
    G = admissible_symmetry_group(code(q, p))
    orbit_mode = [c.polynomial for c in jacobi_distinct(code(q, p), ref.tables()[key]["t"], G)]
    out.append(Check("orbit-representative mode agrees with all subsets", orbit_mode == mine))
    return out


def target_thm31():
    return _jacobi_target("ternary14_t3", 3, 13, (3, 7), 180)


def target_thm41():
    return _jacobi_target("quaternary18_t3", 4, 17, (3, 10), 18018)


def target_thm42():
    out = _jacobi_target("quaternary18_t4", 4, 17)
    values = sorted({c.polynomial.coefficient(4, 9) for c in distinct_classes(4, 17, 4)})
    out.append(Check("coefficient at (4, 9) takes values {12000, 12030}", values == [12000, 12030], str(values)))
    return out


def _proportional(mine: dict, published: dict):
    keys = set(mine) | set(published)
    if not published or not mine:
        return None
    w0 = next(iter(sorted(published)))
    if mine.get(w0, 0) == 0:
        return None
    c = Fraction(mine[w0]) / published[w0]
    return c if all(Fraction(mine.get(w, 0)) == c * published.get(w, 0) for w in keys) else None


def _harmonic_target(key, q, p, special) -> list[Check]:
    C = code(q, p)
    G = admissible_symmetry_group(C)
    basis = invariant_harmonic_basis(G, C.n, 3)
    published = ref.harmonic_enumerator(key)
    pub_dim = ref.invariant_dimension(key)
    out = [Check(f"degree-3 invariant space computed under {G.name} (order {G.order})", len(basis) >= 1,
                 f"dimension {len(basis)}; published dimension {pub_dim}")]
    if pub_dim == 1:
        out.append(Check("dimension equals 1", len(basis) == 1))
    candidates = sorted(w for w in C.weight_distribution if w > 0)
    for i, f in enumerate(basis):
        e = harmonic_weight_enumerator(C, f)
        out.append(Check(f"basis {i}: vanishes at weight {special}", e.get(special, 0) == 0))
        same_support = all((e.get(w, 0) != 0) == (published.get(w, 0) != 0) for w in candidates)
        out.append(Check(f"basis {i}: nonzero exactly where the published enumerator is", same_support,
                         f"support {sorted(e)}"))
        if len(basis) <= pub_dim:
            c = _proportional(e, published)
            out.append(Check(f"basis {i}: exact multiple of the published enumerator", c is not None, f"factor {c}"))
    complete = {sh.weight for sh in report(q, p).shells if sh.complete["multiset"]}
    verdicts = harmonic_design_test(C, G, 3)
    designs = [w for w, v in verdicts.items() if v.is_design and w not in complete]
    out.append(Check(f"harmonic test: the only non-complete 3-design shell is C_{special}", designs == [special],
                     str(designs)))
    return out


def target_thm32():
    return _harmonic_target("ternary14_harmonic3", 3, 13, 10)


def target_thm43():
    return _harmonic_target("quaternary18_harmonic3", 4, 17, 13)


def target_rem52() -> list[Check]:
    out = []
    for (q, p), ws in ref.WEIGHT_SETS.items():
        C = code(q, p)
        out.append(Check(f"weight set of XQR(q={q}, p={p})", sorted(C.weight_distribution) == ws,
                         str(sorted(C.weight_distribution))))
        am = assmus_mattson_max_t(C)
        out.append(Check(f"Assmus-Mattson gives t < 3 for XQR(q={q}, p={p})", am.max_t < 3, f"max t = {am.max_t}"))
    out.append(Check("|C_10| = 546 for the ternary code", code(3, 13).weight_distribution[10] == 546))
    b = shell_blocks(code(3, 13), 10)
    out.append(Check("ternary C_10 is a 3-design by direct count", verify_design(b, 3).lam == 180))
    return out


def target_ex22() -> list[Check]:
    out = []
    for p, order in ((13, 1092), (17, 2448)):
        G, H = psl2(p), pgl2(p)
        out.append(Check(f"|PSL2({p})| = {order}", G.order == order))
        out.append(Check(f"PGL2({p}) is 3-transitive", is_t_transitive(H, 3)))
        part = orbits_on_k_subsets(G, 3)
        out.append(Check(f"PSL2({p}) has 2 orbits on 3-subsets", part.num_orbits == 2 and not is_t_homogeneous(G, 3),
                         str(part.orbit_sizes)))
    for q, p in ((3, 13), (4, 17)):
        ok = all(preserves_shell_supports(code(q, p), g) for g in psl2(p).generators)
        out.append(Check(f"PSL2({p}) generators preserve shell supports of XQR(q={q}, p={p})", ok))
    return out


TARGETS = {
    "thm1.1": target_thm11,
    "thm1.2": target_thm12,
    "rem1.3": target_rem13,
    "thm3.1": target_thm31,
    "thm3.2": target_thm32,
    "thm4.1": target_thm41,
    "thm4.2": target_thm42,
    "thm4.3": target_thm43,
    "rem5.2": target_rem52,
    "ex2.2": target_ex22,
}


def run_target(name: str) -> list[Check]:
    return TARGETS[name]()
