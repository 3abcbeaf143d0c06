from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from centset.analysis import (
    all_subgroups, analyze, ca_partition_holds, cent_count, center, centralizer_family,
    commutator_subgroup, cyclic_subgroups, derived_series, involution_stats, is_ca, is_cg,
    is_metacyclic, is_minimal_nonabelian, is_minimal_nonnilpotent, is_minimal_nonnilpotent_lattice,
    is_nilpotent, is_perfect, is_solvable, isaacs_identity_check, lower_central_series,
    nilpotency_class, normal_subgroups, omega, omega_clique, self_normalizing_nonabelian,
    sylow_subgroup,
)
from centset.core import PermGenSpec, build_from_permutations
from centset.families import FamilySpec, build_family


def fam(name, **params):
    return build_family(FamilySpec(name, params))


perms5 = st.permutations(list(range(5))).map(tuple)


@given(st.lists(perms5, min_size=1, max_size=2))
@settings(max_examples=40, deadline=None)
def test_random_permutation_groups_match_oracle(gens):
    elems, mul = oracles.perm_group(5, gens)
    G = build_from_permutations(PermGenSpec(5, tuple(gens)))
    assert G.order == len(elems)
    assert cent_count(G) == oracles.cent_count(elems, mul)
    assert commutator_subgroup(G).order == oracles.derived_order(elems, mul)
    assert center(G).order == oracles.center_order(elems, mul)
    if G.order <= 24:
        assert omega(G) == oracles.omega(elems, mul)


def test_s3_basics():
    G = fam("symmetric", n=3)
    assert cent_count(G) == 5
    assert commutator_subgroup(G).order == 3
    assert is_cg(G)
    assert omega(G) == 4
    clique = omega_clique(G)
    assert all(not G.commute[a, b] for a in clique for b in clique if a != b)


def test_centralizer_family_includes_group():
    G = fam("dihedral", n=4)
    f = centralizer_family(G)
    assert f.count == 4
    assert max(f.orders()) == 8


@pytest.mark.parametrize("name,params,cg", [
    ("dihedral", {"n": 6}, True),
    ("generalized_quaternion", {"m": 4}, True),
    ("alternating", {"n": 4}, True),
    ("symmetric", {"n": 4}, True),
    ("symmetric", {"n": 5}, False),
    ("alternating", {"n": 5}, False),
])
def test_cg_flags(name, params, cg):
    assert is_cg(build_family(FamilySpec(name, params))) is cg


def test_ca():
    assert is_ca(fam("symmetric", n=3))
    assert is_ca(fam("alternating", n=5))
    assert not is_ca(fam("symmetric", n=4))
    assert ca_partition_holds(fam("alternating", n=4))


def test_series_and_predicates():
    S4 = fam("symmetric", n=4)
    assert [H.order for H in derived_series(S4)] == [24, 12, 4, 1]
    assert is_solvable(S4) and not is_nilpotent(S4)
    A5 = fam("alternating", n=5)
    assert is_perfect(A5) and not is_solvable(A5)
    D16 = fam("dihedral", n=8)
    assert [H.order for H in lower_central_series(D16)] == [16, 4, 2, 1]
    assert nilpotency_class(D16) == 3
    assert nilpotency_class(S4) is None


def test_subgroup_lattice_counts():
    # S4 has 30 subgroups and 4 normal subgroups
    S4 = fam("symmetric", n=4)
    assert len(all_subgroups(S4)) == 30
    assert len(normal_subgroups(S4)) == 4
    # 9 of order 2, 4 of order 3, 3 of order 4, plus the trivial one
    assert len({H.key for _, H in cyclic_subgroups(S4)}) == 17


def test_sylow():
    S4 = fam("symmetric", n=4)
    assert sylow_subgroup(S4, 2).order == 8
    assert sylow_subgroup(S4, 3).order == 3


def test_minimality():
    assert is_minimal_nonabelian(fam("generalized_quaternion", m=2))
    assert is_minimal_nonabelian(fam("symmetric", n=3))
    assert not is_minimal_nonabelian(fam("dihedral", n=8))
    A4 = fam("alternating", n=4)
    assert is_minimal_nonnilpotent(A4) and is_minimal_nonnilpotent_lattice(A4)
    S4 = fam("symmetric", n=4)
    assert not is_minimal_nonnilpotent(S4) and not is_minimal_nonnilpotent_lattice(S4)


def test_metacyclic():
    assert is_metacyclic(fam("dihedral", n=7))
    assert not is_metacyclic(fam("alternating", n=4))


def test_isaacs_identity_on_dihedral():
    checks = isaacs_identity_check(fam("dihedral", n=6))
    assert checks and all(ok for _, ok in checks)


def test_self_normalizing():
    assert self_normalizing_nonabelian(fam("symmetric", n=3))
    # D8 sits normally in D16
    assert not self_normalizing_nonabelian(fam("dihedral", n=8))


def test_involutions():
    s = involution_stats(fam("symmetric", n=3))
    # identity counts as a solution of x^2 = 1
    assert s.i_count == 4 and s.alpha == Fraction(2, 3)


def test_analyze_report():
    d = analyze(fam("dihedral", n=4)).to_dict()
    assert d["order"] == 8 and d["centCount"] == 4 and d["isCG"]
    assert d["omega"] == 3 and d["isNilpotent"]
    assert set(d["flags"]) >= {"minimalNonAbelian", "metacyclic"}
