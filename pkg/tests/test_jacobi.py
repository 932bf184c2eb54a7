import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qrdesigns import reference as ref
from qrdesigns.group import apply_to_mask, mask_of, psl2, subset_of
from qrdesigns.jacobi import (
    JacobiPolynomial,
    jacobi_design_test,
    jacobi_distinct,
    jacobi_polynomial,
    jacobi_tables,
    parse_jacobi,
    parse_monomials,
)
from qrdesigns.qrcode import extended_qr_code
from qrdesigns.reproduce import distinct_classes

ternary_subsets = st.lists(st.integers(0, 13), min_size=0, max_size=5, unique=True).map(sorted)


def brute_jacobi(code, T):
    counts = {}
    for word in code.vectors().tolist():
        m1 = sum(1 for i in T if word[i])
        n1 = sum(1 for i, x in enumerate(word) if x and i not in T)
        counts[(m1, n1)] = counts.get((m1, n1), 0) + 1
    return JacobiPolynomial.from_counts(code.n, len(T), counts)


@pytest.mark.parametrize("T", [(0, 1, 2), (0, 5, 9), (3, 4, 11), (1, 2, 3, 4), (0,)])
def test_matches_python_oracle(ternary, T):
    assert jacobi_polynomial(ternary, T) == brute_jacobi(ternary, T)


@settings(max_examples=25, deadline=None)
@given(ternary_subsets)
def test_universal_invariants(T):
    code = extended_qr_code(3, 13)
    J = jacobi_polynomial(code, T) if T else jacobi_tables(code, [()])[0]
    assert J.total() == 3 ** 7
    assert J.specialize() == code.weight_distribution


def test_empty_subset_is_weight_enumerator(ternary):
    J = jacobi_tables(ternary, [()])[0]
    assert {n1: c for (m1, n1), c in J.coefficients} == ternary.weight_distribution


@pytest.mark.parametrize("q,p,t,count,sizes", [
    (3, 13, 3, 2, [182, 182]),
    (4, 17, 3, 2, [408, 408]),
])
def test_distinct_polynomial_counts(q, p, t, count, sizes):
    classes = distinct_classes(q, p, t)
    assert len(classes) == count
    assert sorted(len(c.subsets) for c in classes) == sorted(sizes)
    C = extended_qr_code(q, p)
    for c in classes:
        assert c.polynomial.total() == q ** C.k
        assert c.polynomial.specialize() == C.weight_distribution


@pytest.mark.parametrize("q,p,t,at,value", [(3, 13, 3, (3, 7), 180), (4, 17, 3, (3, 10), 18018)])
def test_design_coefficient_is_constant(q, p, t, at, value):
    assert {c.polynomial.coefficient(*at) for c in distinct_classes(q, p, t)} == {value}


def test_quaternary_t4_values():
    classes = distinct_classes(4, 17, 4)
    assert len(classes) == 4
    assert sorted({c.polynomial.coefficient(4, 9) for c in classes}) == [12000, 12030]


@pytest.mark.parametrize("q,p,t", [(3, 13, 3), (4, 17, 3)])
def test_orbit_mode_equals_all_subsets(q, p, t):
    C = extended_qr_code(q, p)
    assert jacobi_distinct(C, t, psl2(p)) == distinct_classes(q, p, t)


def test_polynomial_is_constant_on_orbits(ternary):
    G = psl2(13)
    T = (0, 1, 3)
    J = jacobi_polynomial(ternary, T)
    for g in G.generators:
        assert jacobi_polynomial(ternary, subset_of(apply_to_mask(g, mask_of(T)))) == J


@pytest.mark.parametrize("key", ["ternary14_t3", "quaternary18_t3", "quaternary18_t4"])
def test_render_parse_round_trip(key):
    entry = ref.tables()[key]
    for J in ref.jacobi_items(key):
        assert parse_jacobi(J.render(), entry["n"], entry["t"]) == J
        assert J.total() == entry["q"] ** (entry["n"] // 2)


def test_parse_monomials_forms():
    assert parse_monomials("3w^{2}xy^10 - z") == [(3, {"w": 2, "x": 1, "y": 10}), (-1, {"z": 1})]
    with pytest.raises(ValueError):
        parse_jacobi("w^2 x", 4, 1)


def test_design_test_matches_direct_lambda(ternary):
    from qrdesigns.design import verify_design
    from qrdesigns.qrcode import shell_blocks

    verdicts = jacobi_design_test(ternary, 3, classes=distinct_classes(3, 13, 3))
    for w, v in verdicts.items():
        direct = verify_design(shell_blocks(ternary, w), 3)
        assert v.is_design == direct.is_design
        if v.is_design:
            assert v.lam == direct.lam


def test_batches_and_order_are_deterministic(ternary):
    subsets = list(itertools.combinations(range(14), 2))[:70]
    one = jacobi_tables(ternary, subsets, threads=1)
    many = jacobi_tables(ternary, subsets, threads=4)
    assert one == many == [brute_jacobi(ternary, T) for T in subsets[:3]] + one[3:]


def test_bad_subsets_rejected(ternary):
    with pytest.raises(ValueError):
        jacobi_tables(ternary, [(0, 0, 1)])
    with pytest.raises(ValueError):
        jacobi_tables(ternary, [(0, 14, 1)])
