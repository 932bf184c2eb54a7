"""Sweep extended QR codes of small length for shells exceeding delta(C)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .design import design_report
from .field import is_prime
from .qrcode import MAX_CODEWORDS, extended_qr_code, is_quadratic_residue


@dataclass
class ScanRow:
    q: int
    p: int
    n: int
    k: int
    delta_s: dict  # mode -> (delta, s), complete shells excluded from s
    exceptional: dict  # mode -> [weights of non-complete shells beyond delta]
    complete: dict  # mode -> [complete shell weights]
    am_max_t: int
    tmax: int
    notes: list = field(default_factory=list)

    def exceeds(self, mode: str) -> bool:
        d, s = self.delta_s[mode]
        return s is not None and s > d

    def to_dict(self) -> dict:
        return {
            "q": self.q, "p": self.p, "n": self.n, "k": self.k,
            "delta_s": {m: list(v) for m, v in self.delta_s.items()},
            "exceptional_shells": self.exceptional,
            "complete_shells": self.complete,
            "am_max_t": self.am_max_t,
            "tmax": self.tmax,
            "notes": self.notes,
        }


def valid_pairs(qs, max_len: int) -> list[tuple[int, int]]:
    out = []
    for q in qs:
        for p in range(3, max_len):
            if p + 1 <= max_len and is_prime(p) and q % p and is_quadratic_residue(q, p):
                out.append((q, p))
    return out


def scan(qs, max_len: int, tmax: int = 4, progress=None) -> list[ScanRow]:
    rows = []
    for q, p in valid_pairs(qs, max_len):
        code = extended_qr_code(q, p)
        if q ** code.k > MAX_CODEWORDS:
            row = ScanRow(q, p, code.n, code.k, {}, {}, {}, -1, tmax, ["skipped: codeword guard"])
            rows.append(row)
            continue
        rep = design_report(code, tmax=tmax)
        ds, exc, comp = {}, {}, {}
        for mode in ("multiset", "distinct"):
            d, s = rep.delta_s(mode, exclude_complete=True)
            ds[mode] = (d, s)
            exc[mode] = [sh.weight for sh in rep.shells if not sh.complete[mode] and sh.max_t(mode) > d]
            comp[mode] = [sh.weight for sh in rep.shells if sh.complete[mode]]
        notes = []
        if any(v[1] is not None and v[1] >= tmax for v in ds.values()):
            notes.append(f"values equal to {tmax} mean at least {tmax}")
        row = ScanRow(q, p, code.n, code.k, ds, exc, comp, rep.am_max_t, tmax, notes)
        rows.append(row)
        if progress:
            progress(row)
    return rows
