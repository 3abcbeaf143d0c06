import pytest

import oracles
from centset.analysis import cent_count, center, commutator_subgroup, is_abelian, is_cg
from centset.errors import BadParams, OrderCapExceeded
from centset.families import FAMILY_NAMES, FamilySpec, build_family

ORDERS = [
    ("cyclic", {"n": 7}, 7),
    ("elementary_abelian", {"p": 3, "k": 2}, 9),
    ("dihedral", {"n": 5}, 10),
    ("generalized_dihedral", {"m": 4, "n": 4}, 16),
    ("generalized_quaternion", {"m": 3}, 12),
    ("semidihedral", {"n": 4}, 16),
    ("modular_p", {"p": 3, "n": 3}, 27),
    ("u6n", {"n": 2}, 12),
    ("symmetric", {"n": 4}, 24),
    ("alternating", {"n": 5}, 60),
    ("heisenberg", {"p": 3}, 27),
    ("frobenius_metacyclic", {"p": 7, "q": 3}, 21),
    ("gl2", {"p": 3}, 48),
    ("psl2", {"p": 7}, 168),
]


@pytest.mark.parametrize("name,params,order", ORDERS)
def test_family_orders(name, params, order):
    assert build_family(FamilySpec(name, params)).order == order


def test_every_family_name_is_exercised():
    assert set(FAMILY_NAMES) <= {n for n, _, _ in ORDERS}


def _dihedral_perms(n):
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((-i) % n for i in range(n))
    return oracles.perm_group(n, [r, s])


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
def test_dihedral_against_permutation_oracle(n):
    elems, mul = _dihedral_perms(n)
    G = build_family(FamilySpec("dihedral", {"n": n}))
    assert G.order == len(elems)
    assert cent_count(G) == oracles.cent_count(elems, mul)
    assert commutator_subgroup(G).order == oracles.derived_order(elems, mul)
    assert center(G).order == oracles.center_order(elems, mul)


def test_quaternion_as_permutations():
    # regular representation of Q8 on 8 points
    i = (2, 3, 1, 0, 6, 7, 5, 4)
    j = (4, 5, 7, 6, 1, 0, 2, 3)
    elems, mul = oracles.perm_group(8, [i, j])
    G = build_family(FamilySpec("generalized_quaternion", {"m": 2}))
    assert len(elems) == G.order == 8
    assert cent_count(G) == oracles.cent_count(elems, mul) == 4


def test_symmetric_matches_oracle():
    elems, mul = oracles.symmetric_group(4)
    G = build_family(FamilySpec("symmetric", {"n": 4}))
    assert cent_count(G) == oracles.cent_count(elems, mul) == 14


def test_heisenberg_is_extraspecial():
    G = build_family(FamilySpec("heisenberg", {"p": 5}))
    assert G.order == 125 and center(G).order == 5 and commutator_subgroup(G).order == 5
    assert cent_count(G) == 5 + 2


def test_semidihedral_presentation_is_nonabelian():
    G = build_family(FamilySpec("semidihedral", {"n": 4}))
    assert not is_abelian(G) and is_cg(G)


@pytest.mark.parametrize("spec", [
    FamilySpec("dihedral", {"n": 2}),
    FamilySpec("dihedral", {}),
    FamilySpec("dihedral", {"n": 8, "m": 2}),
    FamilySpec("nonesuch", {"n": 3}),
    FamilySpec("generalized_dihedral", {"m": 3, "n": 3}),
    FamilySpec("heisenberg", {"p": 4}),
    FamilySpec("frobenius_metacyclic", {"p": 7, "q": 5}),
])
def test_bad_params(spec):
    with pytest.raises(BadParams):
        build_family(spec)


def test_family_cap():
    with pytest.raises(OrderCapExceeded):
        build_family(FamilySpec("dihedral", {"n": 60}), cap=100)
