import pytest

from centset.analysis import is_cg
from centset.catalog import build_catalog, c3sq_by_q8, cyclic_by_cyclic
from centset.core import direct_product
from centset.families import FamilySpec, build_family, cyclic
from centset.frobenius import (
    decompose, find_complement, frobenius_kernel, frobenius_quotient_shape, is_frobenius,
    is_minimal_frobenius, is_minimal_frobenius_lattice, verify_decomposition,
)


def fam(name, **params):
    return build_family(FamilySpec(name, params))


@pytest.mark.parametrize("G,k,h", [
    (lambda: fam("symmetric", n=3), 3, 2),
    (lambda: fam("alternating", n=4), 4, 3),
    (lambda: cyclic_by_cyclic(5, 4, 2), 5, 4),
    (lambda: fam("frobenius_metacyclic", p=7, q=3), 7, 3),
    (lambda: cyclic_by_cyclic(7, 6, 3), 7, 6),
    (lambda: fam("frobenius_metacyclic", p=11, q=5), 11, 5),
    (lambda: c3sq_by_q8(), 9, 8),
])
def test_kernel_and_complement(G, k, h):
    G = G()
    d = decompose(G)
    assert d is not None
    assert d.kernel.order == k and d.complement.order == h
    assert verify_decomposition(G, d.kernel, d.complement)


@pytest.mark.parametrize("G", [
    lambda: fam("dihedral", n=4),
    lambda: fam("generalized_quaternion", m=2),
    lambda: fam("symmetric", n=4),
    lambda: fam("alternating", n=5),
    lambda: direct_product(fam("symmetric", n=3), cyclic(2)),
    lambda: cyclic(6),
])
def test_not_frobenius(G):
    G = G()
    assert frobenius_kernel(G) is None and not is_frobenius(G) and decompose(G) is None


def test_dihedral_odd_is_frobenius():
    d = decompose(fam("dihedral", n=9))
    assert d.kernel.order == 9 and d.kernel_cyclic and d.complement_prime_order


def test_nonabelian_complement_flags():
    d = decompose(c3sq_by_q8())
    assert d.kernel_elementary_abelian and d.complement_abelian is False


def test_minimality_cases():
    assert is_minimal_frobenius(fam("symmetric", n=3))
    assert is_minimal_frobenius(fam("frobenius_metacyclic", p=7, q=3))
    # F42 contains F21 and D14
    assert not is_minimal_frobenius(cyclic_by_cyclic(7, 6, 3))
    assert not is_minimal_frobenius(fam("dihedral", n=9))
    assert is_minimal_frobenius(fam("dihedral", n=4)) is False


def test_fast_minimality_matches_lattice_on_catalog():
    # lattice scans dominate above order 120
    for name, G in build_catalog(120):
        if is_frobenius(G):
            assert is_minimal_frobenius(G) == is_minimal_frobenius_lattice(G), name


def test_complement_of_a4():
    G = fam("alternating", n=4)
    H = find_complement(G, frobenius_kernel(G))
    assert H.order == 3


def test_quotient_shape():
    # SL(2,3)/Z = A4 is Frobenius with kernel V4 lifting to Q8
    G = build_family(FamilySpec("sl2", {"p": 3}))
    s = frobenius_quotient_shape(G)
    assert s is not None
    assert s.quotient.kernel.order == 4 and s.kernel_lift.order == 8
    assert not s.kernel_lift_abelian
    assert frobenius_quotient_shape(fam("dihedral", n=4)) is None


def test_cyclic_kernel_groups_are_cg():
    for name, G in build_catalog():
        d = decompose(G, with_minimal=False) if is_frobenius(G) else None
        if d is not None and d.kernel_cyclic:
            assert is_cg(G), name
