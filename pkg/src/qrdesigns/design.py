"""Direct t-design verification of code shells by counting blocks over t-subsets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb

import numpy as np

from .group import k_subset_masks, subset_of
from .parallel import map_chunks
from .qrcode import BlockMultiset, GuardError, LinearCode, dual_code, nonzero_weights, shell_blocks

MAX_TSUBSETS = 10**6
MAX_ZETA_BITS = 24
MAX_T = 4
CHUNK = 256


@dataclass
class DesignVerdict:
    v: int
    k: int
    t: int
    b: int
    is_design: bool
    mode: str
    lam: int | None = None
    lambda_range: tuple | None = None
    witness: tuple | None = None  # two t-subsets with different counts

    def to_dict(self) -> dict:
        d = {"is_design": self.is_design}
        if self.is_design:
            d["lambda"] = self.lam
        else:
            d["lambda_range"] = list(self.lambda_range)
            d["witness"] = [list(s) for s in self.witness]
        return d


def containment_counts(blocks: BlockMultiset, t: int, method: str = "zeta", threads: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """For every t-subset S (lexicographic), the number of blocks containing S.

    ``direct`` tests ``S & B == S`` against every block; ``zeta`` runs a
    superset-sum transform over all 2^v masks and reads off the t-subsets.
    """
    v = blocks.v
    subsets = k_subset_masks(v, t)
    if len(subsets) > MAX_TSUBSETS:
        raise GuardError(f"C({v},{t}) exceeds {MAX_TSUBSETS}")
    if method == "zeta" and v <= MAX_ZETA_BITS:
        a = np.zeros(1 << v, dtype=np.int64)
        a[blocks.masks] = blocks.counts
        for i in range(v):
            view = a.reshape(-1, 2, 1 << i)
            view[:, 0, :] += view[:, 1, :]
        return subsets, a[subsets]
    if method not in ("zeta", "direct"):
        raise ValueError(f"unknown method {method}")
    masks, mult = blocks.masks, blocks.counts

    def count(chunk):
        hit = (chunk[:, None] & masks[None, :]) == chunk[:, None]
        return hit.astype(np.int64) @ mult

    parts = map_chunks(count, [subsets[i:i + CHUNK] for i in range(0, len(subsets), CHUNK)], threads)
    return subsets, np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def verify_design(blocks: BlockMultiset, t: int, method: str = "zeta", mode: str | None = None) -> DesignVerdict:
    if t > blocks.k:
        raise ValueError(f"t={t} exceeds block size {blocks.k}")
    subsets, counts = containment_counts(blocks, t, method)
    lo, hi = int(counts.min()), int(counts.max())
    mode = mode or ("distinct" if np.all(blocks.counts == 1) else "multiset")
    verdict = DesignVerdict(blocks.v, blocks.k, t, blocks.size, lo == hi, mode)
    if lo == hi:
        verdict.lam = lo
    else:
        verdict.lambda_range = (lo, hi)
        verdict.witness = (subset_of(int(subsets[counts.argmin()])), subset_of(int(subsets[counts.argmax()])))
    return verdict


def lambda_divisibility(v: int, k: int, lam, t: int, s: int) -> tuple[Fraction, bool]:
    """lambda(S) for an s-set in a t-(v,k,lambda) design, and whether it is integral."""
    if not 0 <= s <= t <= k <= v:
        raise ValueError("need 0 <= s <= t <= k <= v")
    val = Fraction(lam) * comb(v - s, t - s) / comb(k - s, t - s)
    return val, val.denominator == 1


def lambda_from_blocks(v: int, k: int, b: int, t: int) -> tuple[Fraction, bool]:
    """lambda forced by b blocks if they formed a t-(v,k,lambda) design."""
    val = Fraction(b * comb(k, t), comb(v, t))
    return val, val.denominator == 1


def is_complete(blocks: BlockMultiset) -> bool:
    """Every k-subset occurs, all with the same multiplicity."""
    return len(blocks.masks) == comb(blocks.v, blocks.k) and len(set(blocks.counts.tolist())) == 1



@dataclass
class AssmusMattson:
    max_t: int
    d: int
    d_dual: int
    weights: list
    dual_weights: list
    trace: list = dc_field(default_factory=list)


def assmus_mattson_max_t(code: LinearCode) -> AssmusMattson:
    """Largest t in [1, d] meeting either hypothesis of the Assmus-Mattson theorem."""
    n = code.n
    ws = nonzero_weights(code)
    dws = nonzero_weights(dual_code(code))
    d, dd = ws[0], dws[0]
    best, trace = 0, []
    for t in range(1, d + 1):
        s_dual = sum(1 for w in dws if w <= n - t)
        s_code = sum(1 for w in ws if w <= n - t)
        ok = s_dual <= d - t or s_code <= dd - t
        trace.append({"t": t, "dual_weights_le_n_minus_t": s_dual, "bound_d_minus_t": d - t,
                      "code_weights_le_n_minus_t": s_code, "bound_dual_d_minus_t": dd - t, "holds": ok})
        if ok:
            best = t
    return AssmusMattson(best, d, dd, ws, dws, trace)


@dataclass
class ShellReport:
    weight: int
    b: int
    distinct_blocks: int
    complete: dict  # mode -> bool
    modes: dict  # mode -> {t: DesignVerdict}

    def max_t(self, mode: str) -> int:
        if self.complete[mode]:
            return self.weight
        best = 0
        for t, verdict in sorted(self.modes[mode].items()):
            if not verdict.is_design:
                break
            best = t
        return best


@dataclass
class DesignReport:
    code_id: str
    tmax: int
    shells: list
    am_max_t: int | None = None

    def delta_s(self, mode: str = "multiset", exclude_complete: bool = True) -> tuple[int, int | None]:
        """(delta, s): largest t reached by all shells / by some shell.

        Values equal to ``tmax`` mean "at least tmax" for non-complete shells.
        ``s`` is None when every shell is excluded as complete.
        """
        if not self.shells:
            return 0, None
        tops = [sh.max_t(mode) for sh in self.shells]
        delta = min(tops)
        pool = [sh.max_t(mode) for sh in self.shells if not (exclude_complete and sh.complete[mode])]
        s = max(pool) if pool else None
        return delta, s

    def to_dict(self) -> dict:
        out = {
            "code_id": self.code_id,
            "tmax": self.tmax,
            "shells": [
                {
                    "weight": sh.weight,
                    "b": sh.b,
                    "distinct_blocks": sh.distinct_blocks,
                    "complete": sh.complete.get("multiset"),
                    "complete_distinct": sh.complete.get("distinct"),
                    "modes": {m: {str(t): v.to_dict() for t, v in vs.items()} for m, vs in sh.modes.items()},
                }
                for sh in self.shells
            ],
            "am_max_t": self.am_max_t,
        }
        modes = self.shells[0].modes if self.shells else {}
        for mode in modes:
            for flag in (True, False):
                d, s = self.delta_s(mode, flag)
                key = f"{mode}_{'excluding' if flag else 'including'}_complete"
                out.setdefault("delta_s", {})[key] = {"delta": d, "s": s}
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def design_report(
    code: LinearCode,
    tmax: int = MAX_T,
    modes=("multiset", "distinct"),
    weights=None,
    with_am: bool = True,
) -> DesignReport:
    if tmax > MAX_T:
        raise GuardError(f"t > {MAX_T} is not supported")
    shells = []
    for w in weights or nonzero_weights(code):
        multi = shell_blocks(code, w)
        complete, verdicts = {}, {}
        for mode in modes:
            blocks = shell_blocks(code, w, distinct=(mode == "distinct"))
            complete[mode] = is_complete(blocks)
            verdicts[mode] = {t: verify_design(blocks, t, mode=mode) for t in range(1, min(tmax, w) + 1)}
        shells.append(ShellReport(w, multi.size, len(multi.masks), complete, verdicts))
    am = assmus_mattson_max_t(code).max_t if with_am else None
    return DesignReport(code.name or "code", tmax, shells, am)
