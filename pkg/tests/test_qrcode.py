import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qrdesigns.field import make_field
from qrdesigns.qrcode import (
    INFINITY,
    CodeError,
    GuardError,
    LinearCode,
    build_cyclic_code,
    dual_code,
    extend_zero_sum,
    extended_qr_code,
    is_quadratic_residue,
    qr_generator_polynomial,
    shell_blocks,
)


def krawtchouk(k, x, n, q):
    return sum((-1) ** j * (q - 1) ** (k - j) * comb(x, j) * comb(n - x, k - j) for j in range(k + 1))


def macwilliams(wd, n, q, size):
    out = {}
    for k in range(n + 1):
        s = sum(a * krawtchouk(k, w, n, q) for w, a in wd.items())
        assert s % size == 0
        if s:
            out[k] = s // size
    return out


def brute_weight_distribution(code):
    # plain python enumeration, independent of the numpy table path
    F = code.field
    G = code.generator_matrix.tolist()
    wd = {}
    for msg in itertools.product(range(code.q), repeat=code.k):
        word = [0] * code.n
        for a, row in zip(msg, G):
            if a:
                word = [F.add(x, F.mul(a, y)) for x, y in zip(word, row)]
        w = sum(1 for x in word if x)
        wd[w] = wd.get(w, 0) + 1
    return dict(sorted(wd.items()))


def test_ternary_parameters(ternary):
    assert (ternary.n, ternary.k, ternary.q) == (14, 7, 3)
    wd = ternary.weight_distribution
    assert sum(wd.values()) == 2187
    assert sorted(wd) == [0, 6, 7, 8, 9, 10, 11, 12, 14]
    assert wd[10] == 546 and wd[6] == 182
    assert ternary.coordinate_labels[0] == INFINITY


def test_quaternary_parameters(quaternary):
    assert (quaternary.n, quaternary.k, quaternary.q) == (18, 9, 4)
    wd = quaternary.weight_distribution
    assert sum(wd.values()) == 4 ** 9
    assert sorted(wd) == [0, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18]
    assert wd[13] == 51408


@pytest.mark.parametrize("q,p,expected", [
    (2, 7, {0: 1, 4: 14, 8: 1}),
    (3, 11, {0: 1, 6: 264, 9: 440, 12: 24}),
    (2, 17, {0: 1, 6: 102, 8: 153, 10: 153, 12: 102, 18: 1}),
])
def test_classical_extended_qr_codes(q, p, expected):
    code = extended_qr_code(q, p)
    assert code.weight_distribution == dict(sorted(expected.items()))


def test_numpy_table_matches_brute_force(ternary):
    assert brute_weight_distribution(ternary) == ternary.weight_distribution


@pytest.mark.parametrize("q,p", [(3, 13), (4, 5), (2, 7), (3, 11)])
def test_dual_matches_macwilliams(q, p):
    code = extended_qr_code(q, p)
    D = dual_code(code)
    assert D.k == code.n - code.k
    assert D.weight_distribution == macwilliams(code.weight_distribution, code.n, q, q ** code.k)


def test_dual_is_orthogonal_and_involutive(ternary):
    F = ternary.field
    D = dual_code(ternary)
    for g in ternary.generator_matrix:
        for h in D.generator_matrix:
            acc = 0
            for a, b in zip(g, h):
                acc = F.add(acc, F.mul(int(a), int(b)))
            assert acc == 0
    assert np.array_equal(dual_code(D).generator_matrix, ternary.generator_matrix)


@pytest.mark.parametrize("fixture", ["ternary", "quaternary"])
def test_extension_is_zero_sum(fixture, request):
    code = request.getfixturevalue(fixture)
    F = code.field
    for row in code.vectors()[:: max(1, len(code.vectors()) // 500)]:
        acc = 0
        for x in row:
            acc = F.add(acc, int(x))
        assert acc == 0


@pytest.mark.parametrize("fixture", ["ternary", "quaternary"])
def test_shell_sizes_divisible_by_q_minus_1(fixture, request):
    code = request.getfixturevalue(fixture)
    for w, a in code.weight_distribution.items():
        if w:
            assert a % (code.q - 1) == 0


def test_ternary_c10_supports():
    code = extended_qr_code(3, 13)
    b = shell_blocks(code, 10)
    assert len(b.masks) == 273 and set(b.counts.tolist()) == {2}
    assert shell_blocks(code, 10, distinct=True).size == 273


@pytest.mark.parametrize("q,p", [(4, 17), (3, 13)])
def test_extension_scale_does_not_change_weights(q, p):
    base = build_cyclic_code(qr_generator_polynomial(q, p), p)
    ref = extend_zero_sum(base).weight_distribution
    for s in range(1, q):
        assert extend_zero_sum(base, s).weight_distribution == ref


def test_generator_divides_and_has_expected_degree():
    g = qr_generator_polynomial(4, 17)
    assert g.degree == 8
    assert build_cyclic_code(g, 17).k == 9


@pytest.mark.parametrize("q,p", [(3, 5), (3, 7), (4, 2), (3, 3), (3, 15)])
def test_invalid_parameters(q, p):
    with pytest.raises(CodeError):
        extended_qr_code(q, p)


def test_euler_criterion_agrees_with_squares():
    for p in [5, 7, 11, 13, 17, 19, 23]:
        squares = {i * i % p for i in range(1, p)}
        for q in range(1, p):
            assert is_quadratic_residue(q, p) == (q in squares)


def test_json_round_trip(quaternary):
    back = LinearCode.loads(quaternary.dumps())
    assert np.array_equal(back.generator_matrix, quaternary.generator_matrix)
    assert back.coordinate_labels == quaternary.coordinate_labels
    assert back.fingerprint == quaternary.fingerprint
    assert back.dumps() == quaternary.dumps()


def test_codeword_guard():
    F = make_field(4)
    big = LinearCode(F, np.eye(13, 14, dtype=np.int64))
    with pytest.raises(GuardError):
        big.vectors()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=7, max_size=7))
def test_membership_of_random_combinations(msg):
    code = extended_qr_code(3, 13)
    F = code.field
    word = [0] * code.n
    for a, row in zip(msg, code.generator_matrix.tolist()):
        word = [F.add(x, F.mul(a, y)) for x, y in zip(word, row)]
    assert code.contains(word)
    if any(word):
        bumped = list(word)
        bumped[0] = F.add(bumped[0], 1)
        assert not code.contains(bumped)


@pytest.mark.parametrize("q,p", [(3, 13), (4, 17), (3, 11)])
def test_weights_independent_of_root_choice(q, p):
    from qrdesigns.field import Poly, make_extension, multiplicative_order, pth_root_of_unity

    F = make_field(q)
    E = make_extension(F, multiplicative_order(q, p))
    alpha = pth_root_of_unity(E, p)
    residues = sorted({i * i % p for i in range(1, p)})
    ref_wd = extended_qr_code(q, p).weight_distribution
    for j in range(1, p):
        beta = E.pow(alpha, j)
        g = Poly(E, [1])
        for r in residues:
            g = g * Poly(E, [E.neg(E.pow(beta, r)), 1])
        assert all(E.in_base(c) for c in g.coeffs)
        code = extend_zero_sum(build_cyclic_code(Poly(F, g.coeffs), p))
        assert code.weight_distribution == ref_wd
