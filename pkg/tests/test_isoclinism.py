import numpy as np

from centset.analysis import cent_count, commutator_subgroup
from centset.catalog import build_catalog
from centset.core import direct_product
from centset.families import FamilySpec, build_family, cyclic
from centset.isoclinism import (
    IsoclinismCertificate, are_isoclinic, cent_invariance_holds, commutator_pairing, isoclinic_to_derived,
    verify_certificate,
)


def fam(name, **params):
    return build_family(FamilySpec(name, params))


def test_d8_q8_isoclinic_with_verified_certificate():
    A, B = fam("dihedral", n=4), fam("generalized_quaternion", m=2)
    v = are_isoclinic(A, B)
    assert v.isoclinic and v.certificate.verified
    assert verify_certificate(commutator_pairing(A), commutator_pairing(B), v.certificate)


def test_tampered_certificate_fails():
    A, B = fam("dihedral", n=4), fam("generalized_quaternion", m=2)
    c = are_isoclinic(A, B).certificate
    psi = c.psi.copy()
    if len(psi) > 1:
        psi[1] = 0
    bad = IsoclinismCertificate(c.phi, psi, False)
    assert not verify_certificate(commutator_pairing(A), commutator_pairing(B), bad)


def test_direct_factor_abelian_preserves_class():
    S3 = fam("symmetric", n=3)
    v = are_isoclinic(S3, direct_product(S3, cyclic(5)))
    assert v.isoclinic


def test_heisenberg_vs_s3_prunes_on_quotient_order():
    H, S = fam("heisenberg", p=3), fam("symmetric", n=3)
    assert cent_count(H) == cent_count(S) == 5
    assert commutator_subgroup(H).order == commutator_subgroup(S).order == 3
    v = are_isoclinic(H, S)
    assert not v.isoclinic and v.pruned
    assert "9 != 6" in v.reason


def test_exhaustive_negative():
    # D16 and Q16 are isoclinic; D16 and SD16 too; D8 x C2 vs Q8 x C2 also
    assert are_isoclinic(fam("dihedral", n=8), fam("generalized_quaternion", m=4)).isoclinic
    # S3 x S3 vs A4 x C3 have no chance: different quotient orders
    v = are_isoclinic(direct_product(fam("symmetric", n=3), fam("symmetric", n=3)),
                      direct_product(fam("alternating", n=4), cyclic(3)))
    assert not v.isoclinic


def test_pairing_well_defined():
    p = commutator_pairing(fam("heisenberg", p=3))
    assert p.quotient.order == 9
    assert p.pairing.shape == (9, 9)
    assert (np.diag(p.pairing) == 0).all()


def test_isoclinic_to_derived_for_perfect_quotient():
    v = isoclinic_to_derived(fam("alternating", n=5))
    assert v.isoclinic


def test_cent_count_invariant_on_isoclinic_catalog_pairs():
    pairs = 0
    for n in (16, 24):
        groups = [G for _, G in build_catalog() if G.order == n]
        for i, A in enumerate(groups):
            for B in groups[i + 1:]:
                if are_isoclinic(A, B).isoclinic:
                    pairs += 1
                    assert cent_invariance_holds(A, B)
    assert pairs >= 5
