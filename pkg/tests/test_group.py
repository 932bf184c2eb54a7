import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qrdesigns.group import (
    PermutationGroup,
    admissible_symmetry_group,
    apply_to_mask,
    compose,
    count_orbits_burnside,
    identity,
    inverse,
    is_t_homogeneous,
    is_t_transitive,
    k_subset_masks,
    mask_of,
    orbits_on_k_subsets,
    pgl2,
    preserves_code,
    preserves_shell_supports,
    psl2,
    subset_of,
    symmetric_group,
    trivial_group,
)
from qrdesigns.qrcode import extended_qr_code

perms = st.integers(2, 7).flatmap(lambda n: st.permutations(list(range(n))).map(tuple))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17])
def test_psl2_and_pgl2_orders(p):
    assert psl2(p).order == p * (p * p - 1) // 2
    assert pgl2(p).order == p * (p * p - 1)


@pytest.mark.parametrize("p", [13, 17])
def test_transitivity_facts(p):
    assert is_t_transitive(pgl2(p), 3)
    assert is_t_transitive(psl2(p), 2)
    assert not is_t_homogeneous(psl2(p), 3)


@pytest.mark.parametrize("p,k,orbits", [(13, 3, 2), (17, 3, 2), (13, 4, 4), (17, 4, 4)])
def test_orbits_match_burnside(p, k, orbits):
    G = psl2(p)
    part = orbits_on_k_subsets(G, k)
    assert part.num_orbits == orbits == count_orbits_burnside(G, k)
    assert sum(part.orbit_sizes) == len(k_subset_masks(p + 1, k))


def test_orbits_are_group_stable():
    G = psl2(13)
    part = orbits_on_k_subsets(G, 3)
    for m, j in part.membership.items():
        for g in G.generators:
            assert part.membership[apply_to_mask(g, m)] == j


def test_representatives_are_least_in_orbit():
    part = orbits_on_k_subsets(psl2(13), 3)
    for j, rep in enumerate(part.representatives):
        assert rep == min(subset_of(m) for m in part.orbit_masks(j))


def test_symmetric_and_trivial_groups():
    assert symmetric_group(5).order == 120
    assert orbits_on_k_subsets(symmetric_group(6), 3).num_orbits == 1
    assert orbits_on_k_subsets(trivial_group(6), 2).num_orbits == 15
    assert count_orbits_burnside(trivial_group(6), 2) == 15


@pytest.mark.parametrize("q,p", [(3, 13), (4, 17)])
def test_certification(q, p):
    code = extended_qr_code(q, p)
    assert all(preserves_shell_supports(code, g) for g in psl2(p).generators)
    G = admissible_symmetry_group(code)
    assert G.order == psl2(p).order
    assert preserves_shell_supports(code, identity(code.n))


def test_transposition_is_rejected(ternary):
    swap = list(range(ternary.n))
    swap[1], swap[2] = swap[2], swap[1]
    assert not preserves_shell_supports(ternary, tuple(swap))
    assert not preserves_code(ternary, tuple(swap))
    assert preserves_code(ternary, identity(ternary.n))


def test_translation_is_a_code_automorphism(ternary):
    # y -> y + 1 on the cyclic coordinates fixes infinity
    shift = psl2(13).generators[0]
    assert shift[0] == 0
    assert preserves_code(ternary, shift)


def test_fallback_when_psl2_does_not_apply():
    code = extended_qr_code(3, 11)
    # length 12 = 11 + 1; pass a prime that does not fit the length
    G = admissible_symmetry_group(code, p=4)
    assert G.order == 1


@settings(max_examples=100, deadline=None)
@given(perms)
def test_inverse_and_composition(g):
    n = len(g)
    assert compose(g, inverse(g)) == identity(n)
    for subset in itertools.combinations(range(n), 2):
        m = mask_of(subset)
        assert apply_to_mask(inverse(g), apply_to_mask(g, m)) == m


@settings(max_examples=30, deadline=None)
@given(st.lists(st.permutations(list(range(6))).map(tuple), min_size=1, max_size=3), st.integers(1, 3))
def test_orbit_count_agrees_with_burnside(gens, k):
    G = PermutationGroup(6, gens)
    assert orbits_on_k_subsets(G, k).num_orbits == count_orbits_burnside(G, k)


def test_bad_permutation_rejected():
    with pytest.raises(ValueError):
        PermutationGroup(3, [(0, 0, 1)])
    with pytest.raises(ValueError):
        psl2(15)
