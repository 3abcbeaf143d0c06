"""Commutator pairings and isoclinism certificates.

An isoclinism ``A ~ B`` is a pair of isomorphisms ``phi: A/Z(A) -> B/Z(B)`` and
``psi: A' -> B'`` with ``psi([a, b]) = [phi(a), phi(b)]``.  Only ``phi`` is
searched; ``psi`` is forced on commutator values, which generate ``A'``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from .analysis import cent_count, center, central_quotient, commutator_subgroup, is_perfect
from .core import CayleyGroup, SubgroupSet, subgroup_as_group
from .iso import DEFAULT_SEARCH_BUDGET, _Budget, extend_homomorphism, is_isomorphism, iter_isomorphisms


@dataclass(frozen=True)
class CommutatorPairing:
    """``pairing[x, y]`` is the index in ``derived_group`` of ``[a, b]`` for
    coset representatives ``a`` of ``x`` and ``b`` of ``y``."""

    quotient: CayleyGroup
    projection: np.ndarray
    derived: SubgroupSet
    derived_group: CayleyGroup
    derived_embedding: np.ndarray
    pairing: np.ndarray


def commutator_pairing(G: CayleyGroup) -> CommutatorPairing:
    Q, proj = central_quotient(G)
    D = commutator_subgroup(G)
    DG, emb = subgroup_as_group(G, D)
    local = np.full(G.order, -1, dtype=np.intp)
    local[emb] = np.arange(len(emb))
    Z = center(G)
    reps = np.unique(G.itable[:, Z.members].min(axis=1))
    pairing = local[G.commutators[np.ix_(reps, reps)]]
    # a second representative choice must give the same values
    alt = G.itable[reps, Z.members[-1]]
    if not np.array_equal(pairing, local[G.commutators[np.ix_(alt, alt)]]):
        raise AssertionError("commutator pairing is not well defined")
    return CommutatorPairing(Q, proj, D, DG, emb, pairing)


@dataclass(frozen=True)
class IsoclinismCertificate:
    phi: np.ndarray
    psi: np.ndarray
    verified: bool

    def to_dict(self) -> dict[str, Any]:
        return {"phi": self.phi.tolist(), "psi": self.psi.tolist(), "verified": self.verified}


@dataclass(frozen=True)
class IsoclinismVerdict:
    """Outcome of an isoclinism test: certificate, or the reason there is none."""

    certificate: IsoclinismCertificate | None
    reason: str
    pruned: bool

    @property
    def isoclinic(self) -> bool:
        return self.certificate is not None


def _forced_psi(pa: CommutatorPairing, pb: CommutatorPairing, phi: np.ndarray) -> np.ndarray | None:
    """Induce ``psi`` from ``phi`` on pairing values and check it is an isomorphism."""
    nd = pa.derived_group.order
    src = pa.pairing.ravel()
    dst = pb.pairing[np.ix_(phi, phi)].ravel()
    psi = np.full(nd, -1, dtype=np.intp)
    psi[src] = dst
    if not np.array_equal(psi[src], dst) or (psi < 0).any():
        return None
    gens = np.unique(src).tolist()
    f = extend_homomorphism(pa.derived_group, gens, psi[gens].tolist(), pb.derived_group)
    if f is None or (f < 0).any() or not np.array_equal(f, psi):
        return None
    if not is_isomorphism(pa.derived_group, pb.derived_group, psi):
        return None
    return psi


def verify_certificate(pa: CommutatorPairing, pb: CommutatorPairing,
                       cert: IsoclinismCertificate) -> bool:
    return (is_isomorphism(pa.quotient, pb.quotient, cert.phi)
            and is_isomorphism(pa.derived_group, pb.derived_group, cert.psi)
            and bool(np.array_equal(cert.psi[pa.pairing], pb.pairing[np.ix_(cert.phi, cert.phi)])))


def are_isoclinic(A: CayleyGroup, B: CayleyGroup,
                  budget: int = DEFAULT_SEARCH_BUDGET) -> IsoclinismVerdict:
    """Search for an isoclinism ``A -> B``.

    Pre-prunes on ``|A/Z|``, ``|A'|`` and the element-order histograms of the
    central quotients.  Budget exhaustion raises SearchBudgetExceeded.
    """
    QA, _ = central_quotient(A)
    QB, _ = central_quotient(B)
    if QA.order != QB.order:
        return IsoclinismVerdict(None, f"pre-prune: |G/Z| {QA.order} != {QB.order}", True)
    da, db = commutator_subgroup(A).order, commutator_subgroup(B).order
    if da != db:
        return IsoclinismVerdict(None, f"pre-prune: |G'| {da} != {db}", True)
    if QA.order_histogram() != QB.order_histogram():
        return IsoclinismVerdict(None, "pre-prune: central quotients have different element-order histograms", True)
    pa, pb = commutator_pairing(A), commutator_pairing(B)
    counter = _Budget(budget)
    for phi in iter_isomorphisms(QA, QB, budget, _counter=counter):
        psi = _forced_psi(pa, pb, phi)
        if psi is None:
            continue
        cert = IsoclinismCertificate(phi, psi, True)
        if not verify_certificate(pa, pb, cert):
            raise AssertionError("isoclinism certificate failed re-verification")
        return IsoclinismVerdict(cert, "certificate found", False)
    return IsoclinismVerdict(None, "exhaustive search: no compatible (phi, psi)", False)


def isoclinic_to_derived(G: CayleyGroup, budget: int = DEFAULT_SEARCH_BUDGET) -> IsoclinismVerdict:
    """Test ``G ~ G'``; for perfect ``G/Z(G)`` also confirms ``G' Z(G) = G``."""
    Q, _ = central_quotient(G)
    D = commutator_subgroup(G)
    if is_perfect(Q):
        Z = center(G)
        prod = np.zeros(G.order, dtype=bool)
        prod[G.itable[np.ix_(D.members, Z.members)].ravel()] = True
        if not prod.all():
            raise AssertionError("G/Z perfect but G'Z(G) != G")
    DG, _ = subgroup_as_group(G, D)
    return are_isoclinic(G, DG, budget)


def cent_invariance_holds(A: CayleyGroup, B: CayleyGroup) -> bool:
    return cent_count(A) == cent_count(B)
