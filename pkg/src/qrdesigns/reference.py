"""Published coefficient tables for the two codes, shipped as package data."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .jacobi import JacobiPolynomial, parse_jacobi, parse_monomials

TERNARY = (3, 13)
QUATERNARY = (4, 17)


@lru_cache(maxsize=None)
def tables() -> dict:
    return json.loads(resources.files(__package__).joinpath("data/reference_tables.json").read_text())


def jacobi_items(key: str) -> list[JacobiPolynomial]:
    """Every listed item, in listed order (items may repeat)."""
    entry = tables()[key]
    return [parse_jacobi(s, entry["n"], entry["t"]) for s in entry["polynomials"]]


def jacobi_representatives(key: str) -> list[tuple[int, ...]]:
    """Orbit representatives as listed, 1-based labels."""
    return [tuple(r) for r in tables()[key]["representatives"]]


def harmonic_enumerator(key: str) -> dict[int, int]:
    """Weight -> coefficient of x^(n-w) y^w."""
    out = {}
    for c, exps in parse_monomials(tables()[key]["enumerator"]):
        out[exps.get("y", 0)] = out.get(exps.get("y", 0), 0) + c
    return out


def invariant_dimension(key: str) -> int:
    return tables()[key]["invariant_dimension"]


WEIGHT_SETS = {
    TERNARY: [0, 6, 7, 8, 9, 10, 11, 12, 14],
    QUATERNARY: [0, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18],
}
