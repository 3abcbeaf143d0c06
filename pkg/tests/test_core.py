import numpy as np
import pytest

import oracles
from centset.core import (
    ActionSpec, CayleyGroup, PermGenSpec, build_from_permutations, conjugacy_classes,
    direct_product, format_cycles, generated_subgroup, is_normal, parse_cycles,
    quotient_group, semidirect_product, subgroup_as_group,
)
from centset.errors import InvalidAction, InvalidGroupTable, InvalidPermutation, NotNormal, OrderCapExceeded
from centset.families import cyclic, dihedral, symmetric
from centset.analysis import center, commutator_subgroup


def _s4():
    return build_from_permutations(PermGenSpec(4, ((1, 2, 3, 0), (1, 0, 2, 3))))


def test_permutation_closure_matches_oracle_order():
    gens = [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)]
    elems, _ = oracles.perm_group(5, gens)
    G = build_from_permutations(PermGenSpec(5, tuple(gens)))
    assert G.order == len(elems) == 120


def test_identity_is_index_zero_and_inverses():
    G = _s4()
    assert np.array_equal(G.table[0], np.arange(24))
    for a in range(G.order):
        assert G.mul(a, G.inv(a)) == 0


def test_validate_rejects_nonassociative_latin_square():
    # a loop of order 5 that is not a group
    t = np.array([[0, 1, 2, 3, 4],
                  [1, 0, 3, 4, 2],
                  [2, 4, 0, 1, 3],
                  [3, 2, 4, 0, 1],
                  [4, 3, 1, 2, 0]])
    with pytest.raises(InvalidGroupTable):
        CayleyGroup(t)


@pytest.mark.parametrize("table", [[[0, 1], [1, 1]], [[1, 0], [0, 1]], [[0, 2], [2, 0]]])
def test_validate_rejects_bad_tables(table):
    with pytest.raises(InvalidGroupTable):
        CayleyGroup(table)


def test_trivial_group():
    assert CayleyGroup([[0]]).order == 1


def test_cycle_notation_round_trip():
    p = parse_cycles("(0 1 2)(3 4)", 6)
    assert p == (1, 2, 0, 4, 3, 5)
    assert format_cycles(p) == "(0 1 2)(3 4)"
    assert parse_cycles("()", 3) == (0, 1, 2)


@pytest.mark.parametrize("text", ["(0 1", "(0 0)", "(0 7)", "0 1)"])
def test_cycle_notation_errors(text):
    with pytest.raises(InvalidPermutation):
        parse_cycles(text, 4)


def test_order_cap_enforced():
    with pytest.raises(OrderCapExceeded):
        build_from_permutations(PermGenSpec(5, ((1, 2, 3, 4, 0), (1, 0, 2, 3, 4))), cap=100)
    with pytest.raises(OrderCapExceeded):
        direct_product(dihedral(8), dihedral(8), cap=100)


def test_direct_product_structure():
    G = direct_product(symmetric(3), cyclic(4))
    assert G.order == 24
    assert center(G).order == 4
    assert commutator_subgroup(G).order == 3


def test_trivial_semidirect_equals_direct():
    N, H = cyclic(5), cyclic(2)
    ident = tuple(range(5))
    S = semidirect_product(N, H, ActionSpec((1,), (ident,)))
    assert np.array_equal(S.table, direct_product(N, H).table)


def test_inversion_action_gives_dihedral():
    N, H = cyclic(5), cyclic(2)
    inv = tuple((-i) % 5 for i in range(5))
    S = semidirect_product(N, H, ActionSpec((1,), (inv,)))
    assert center(S).order == 1 and commutator_subgroup(S).order == 5


def test_bad_action_rejected():
    with pytest.raises(InvalidAction):
        semidirect_product(cyclic(5), cyclic(2), ActionSpec((1,), ((0, 2, 1, 3, 4),)))
    # order-4 automorphism on a generator of order 2
    sq = tuple((2 * i) % 5 for i in range(5))
    with pytest.raises(InvalidAction):
        semidirect_product(cyclic(5), cyclic(2), ActionSpec((1,), (sq,)))


def test_generated_subgroup_and_quotient():
    G = _s4()
    D = commutator_subgroup(G)
    assert D.order == 12 and is_normal(G, D)
    Q, proj = quotient_group(G, D)
    assert Q.order == 2 and proj.shape == (24,)
    H = generated_subgroup(G, [1])
    assert H.order == 4
    with pytest.raises(NotNormal):
        quotient_group(G, H)
    sub, emb = subgroup_as_group(G, D)
    assert sub.order == 12 and len(emb) == 12


def test_conjugacy_classes_partition():
    G = _s4()
    classes = conjugacy_classes(G)
    assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]
    assert sorted(x for c in classes for x in c) == list(range(24))
