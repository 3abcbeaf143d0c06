"""Abstract Frobenius-group detection: kernel, complement, minimality."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .analysis import (
    DEFAULT_LATTICE_CAP,
    all_subgroups,
    central_quotient,
    cyclic_subgroups,
    is_prime,
    normal_subgroups,
    subgroup_is_abelian,
    subgroup_is_cyclic,
)
from .core import CayleyGroup, SubgroupSet, generated_subgroup, memoized, subgroup_as_group
from .errors import ComplementNotFound, OrderCapExceeded


def _kernel_criterion(G: CayleyGroup, N: SubgroupSet) -> bool:
    if N.order in (1, G.order):
        return False
    if math.gcd(N.order, G.order // N.order) != 1:
        return False
    nonid = N.members[1:]
    return not (G.commute[nonid] & ~N.mask).any()


@memoized
def frobenius_kernel(G: CayleyGroup) -> SubgroupSet | None:
    """Least proper nontrivial normal Hall subgroup N with C(n) <= N for n != 1."""
    cands = [N for N in normal_subgroups(G) if _kernel_criterion(G, N)]
    if not cands:
        return None
    for A in cands:
        for B in cands:
            if not (A.issubset(B) or B.issubset(A)):
                raise AssertionError("kernel anomaly: two non-nested kernel candidates")
    return cands[0]


def is_frobenius(G: CayleyGroup) -> bool:
    return frobenius_kernel(G) is not None


def _complement_ok(G: CayleyGroup, K: SubgroupSet, H: SubgroupSet) -> bool:
    if H.order * K.order != G.order or H.intersection(K).order != 1:
        return False
    # h k h^-1 != k for nontrivial h, k  <=>  C(h) meets K trivially
    hs = H.members[1:]
    return not (G.commute[np.ix_(hs, K.members[1:])]).any()


def find_complement(G: CayleyGroup, K: SubgroupSet,
                    lattice_cap: int = DEFAULT_LATTICE_CAP) -> SubgroupSet:
    """A complement of the kernel ``K``: first among subgroups generated by at
    most two elements of order dividing ``|G:K|``, then by full lattice scan."""
    index = G.order // K.order
    orders = G.element_orders
    elems = [int(x) for x in np.flatnonzero(index % orders == 0) if x]
    seen = set()
    singles = []
    for x in elems:
        H = generated_subgroup(G, [x])
        if H.key in seen:
            continue
        seen.add(H.key)
        singles.append((x, H))
        if H.order == index and _complement_ok(G, K, H):
            return H
    for i, (x, Hx) in enumerate(singles):
        for y, _ in singles[i + 1:]:
            if Hx.mask[y]:
                continue
            H = generated_subgroup(G, [y], start=Hx)
            if H.key in seen:
                continue
            seen.add(H.key)
            if H.order == index and _complement_ok(G, K, H):
                return H
    if G.order <= lattice_cap:
        for H in all_subgroups(G, lattice_cap):
            if H.order == index and _complement_ok(G, K, H):
                return H
    raise ComplementNotFound(f"no complement of order {index} located")


@dataclass(frozen=True)
class FrobeniusDecomposition:
    kernel: SubgroupSet
    complement: SubgroupSet | None
    kernel_abelian: bool
    kernel_cyclic: bool
    kernel_elementary_abelian: bool
    complement_abelian: bool | None
    complement_cyclic: bool | None
    complement_prime_order: bool | None
    minimal: bool | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "kernel": {"order": self.kernel.order},
            "complement": None if self.complement is None else {"order": self.complement.order},
            "flags": {
                "kernelAbelian": self.kernel_abelian,
                "kernelCyclic": self.kernel_cyclic,
                "kernelElementaryAbelian": self.kernel_elementary_abelian,
                "complementAbelian": self.complement_abelian,
                "complementCyclic": self.complement_cyclic,
                "complementPrimeOrder": self.complement_prime_order,
            },
            "minimal": self.minimal,
        }


def _elementary_abelian(G: CayleyGroup, S: SubgroupSet) -> bool:
    if not subgroup_is_abelian(G, S):
        return False
    orders = set(G.element_orders[S.members[1:]].tolist())
    return len(orders) == 1 and is_prime(orders.pop())


def verify_decomposition(G: CayleyGroup, K: SubgroupSet, H: SubgroupSet | None) -> bool:
    if not _kernel_criterion(G, K):
        return False
    conj = G.conjugation[:, K.members]
    if not K.mask[conj].all():
        return False
    return H is None or _complement_ok(G, K, H)


@memoized
def is_minimal_frobenius(G: CayleyGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> bool | None:
    """Frobenius with no Frobenius proper subgroup.

    Scans 2-generated subgroups only: in a Frobenius group K x| H, an element
    h of prime order in H and any k != 1 in K generate a Frobenius subgroup,
    so any Frobenius subgroup contains a 2-generated one.  ``lattice_cap`` is
    accepted for symmetry with the lattice version and otherwise unused.
    """
    if not is_frobenius(G):
        return False
    gens = [x for x, _ in cyclic_subgroups(G)]
    seen = set()
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            if G.commute[x, y]:
                continue
            S = generated_subgroup(G, [x, y])
            if S.order == G.order or S.key in seen:
                continue
            seen.add(S.key)
            if is_frobenius(subgroup_as_group(G, S)[0]):
                return False
    return True


def is_minimal_frobenius_lattice(G: CayleyGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> bool | None:
    """Same predicate over the full subgroup lattice; None above the cap."""
    if not is_frobenius(G):
        return False
    if G.order > lattice_cap:
        return None
    for S in all_subgroups(G, lattice_cap):
        if S.is_full() or S.order < 6:
            continue
        if is_frobenius(subgroup_as_group(G, S)[0]):
            return False
    return True


def structural_minimality_condition(d: FrobeniusDecomposition) -> bool | None:
    """Elementary abelian kernel and prime-order complement (necessary condition)."""
    if d.complement_prime_order is None:
        return None
    return d.kernel_elementary_abelian and d.complement_prime_order


def decompose(G: CayleyGroup, lattice_cap: int = DEFAULT_LATTICE_CAP,
              with_minimal: bool = True) -> FrobeniusDecomposition | None:
    """Kernel, complement and flags; ``minimal`` is None unless requested
    (it needs the full subgroup lattice)."""
    K = frobenius_kernel(G)
    if K is None:
        return None
    try:
        H = find_complement(G, K, lattice_cap)
    except ComplementNotFound:
        H = None
    minimal = None
    if with_minimal:
        try:
            minimal = is_minimal_frobenius(G, lattice_cap)
        except OrderCapExceeded:
            pass
    d = FrobeniusDecomposition(
        kernel=K,
        complement=H,
        kernel_abelian=subgroup_is_abelian(G, K),
        kernel_cyclic=subgroup_is_cyclic(G, K),
        kernel_elementary_abelian=_elementary_abelian(G, K),
        complement_abelian=None if H is None else subgroup_is_abelian(G, H),
        complement_cyclic=None if H is None else subgroup_is_cyclic(G, H),
        complement_prime_order=None if H is None else is_prime(H.order),
        minimal=minimal,
    )
    if not verify_decomposition(G, K, H):
        raise AssertionError("Frobenius decomposition failed re-verification")
    return d


@dataclass(frozen=True)
class QuotientShape:
    """Frobenius structure of G/Z(G) lifted back to G (``quotient.minimal``
    is not computed; call :func:`is_minimal_frobenius` on the quotient)."""

    quotient: FrobeniusDecomposition
    kernel_lift: SubgroupSet
    complement_lift: SubgroupSet | None
    kernel_lift_abelian: bool
    kernel_lift_cyclic: bool
    complement_lift_abelian: bool | None
    complement_lift_cyclic: bool | None


def frobenius_quotient_shape(G: CayleyGroup) -> QuotientShape | None:
    Q, proj = central_quotient(G)
    d = decompose(Q, with_minimal=False)
    if d is None:
        return None
    K = SubgroupSet.from_mask(d.kernel.mask[proj])
    H = None if d.complement is None else SubgroupSet.from_mask(d.complement.mask[proj])
    return QuotientShape(
        quotient=d,
        kernel_lift=K,
        complement_lift=H,
        kernel_lift_abelian=subgroup_is_abelian(G, K),
        kernel_lift_cyclic=subgroup_is_cyclic(G, K),
        complement_lift_abelian=None if H is None else subgroup_is_abelian(G, H),
        complement_lift_cyclic=None if H is None else subgroup_is_cyclic(G, H),
    )
