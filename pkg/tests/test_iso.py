import numpy as np
import pytest

from centset.core import PermGenSpec, build_from_permutations, direct_product
from centset.errors import SearchBudgetExceeded
from centset.families import FamilySpec, build_family, cyclic
from centset.iso import are_isomorphic, is_isomorphism, isomorphism_search, iter_isomorphisms


def fam(name, **params):
    return build_family(FamilySpec(name, params))


def test_s3_two_constructions():
    A = fam("symmetric", n=3)
    B = fam("dihedral", n=3)
    f = isomorphism_search(A, B)
    assert f is not None and is_isomorphism(A, B, f)


def test_automorphism_counts():
    # |Aut(S3)| = 6, |Aut(D8)| = 8, |Aut(Q8)| = 24
    for G, n in [(fam("symmetric", n=3), 6), (fam("dihedral", n=4), 8),
                 (fam("generalized_quaternion", m=2), 24)]:
        assert sum(1 for _ in iter_isomorphisms(G, G)) == n


def test_same_invariants_not_isomorphic():
    # D8 and Q8 have the same class sizes
    assert not are_isomorphic(fam("dihedral", n=4), fam("generalized_quaternion", m=2))
    # both abelian-by-cyclic of order 16
    assert not are_isomorphic(direct_product(cyclic(4), cyclic(4)), fam("modular_p", p=2, n=4))


def test_unpruned_search_agrees():
    A, B = fam("dihedral", n=6), fam("u6n", n=2)
    assert are_isomorphic(A, A)
    assert list(iter_isomorphisms(A, B, prune=False)) == []


def test_perm_vs_family_a4():
    A = build_from_permutations(PermGenSpec(4, ((1, 2, 0, 3), (1, 0, 3, 2))))
    assert are_isomorphic(A, fam("alternating", n=4))


def test_is_isomorphism_rejects_non_bijection():
    G = cyclic(4)
    assert not is_isomorphism(G, G, np.zeros(4, dtype=int))
    assert not is_isomorphism(G, G, np.array([0, 1, 3, 2]))


def test_budget():
    G = fam("elementary_abelian", p=2, k=4)
    with pytest.raises(SearchBudgetExceeded):
        isomorphism_search(G, G, budget=2)
