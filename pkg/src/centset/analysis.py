"""Centralizer-centric computations and structural predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np
from sympy import factorint

from .clique import max_clique
from .core import (
    CayleyGroup,
    SubgroupSet,
    conjugacy_classes,
    generated_subgroup,
    memoized,
    quotient_group,
)
from .errors import CentsetError, LatticeBudgetExceeded, OrderCapExceeded, SearchBudgetExceeded

DEFAULT_LATTICE_CAP = 200
NORMAL_LATTICE_BUDGET = 10**5
OMEGA_QUOTIENT_CAP = 256


# -- centre, centralizers, commutators --------------------------------

@memoized
def center(G: CayleyGroup) -> SubgroupSet:
    return SubgroupSet.from_mask(G.commute.all(axis=1))


def centralizer(G: CayleyGroup, x: int) -> SubgroupSet:
    return SubgroupSet.from_mask(G.commute[x])


def centralizer_of_set(G: CayleyGroup, S: SubgroupSet) -> SubgroupSet:
    return SubgroupSet.from_mask(G.commute[:, S.members].all(axis=1))


@dataclass(frozen=True)
class CentralizerFamily:
    """Distinct element centralizers, sorted by (order, mask)."""

    parent: CayleyGroup = field(repr=False)
    distinct: tuple[SubgroupSet, ...]
    witness_for: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.distinct)

    def orders(self) -> list[int]:
        return [c.order for c in self.distinct]


@memoized
def centralizer_family(G: CayleyGroup) -> CentralizerFamily:
    packed = np.packbits(G.commute, axis=1)
    _, first = np.unique(packed, axis=0, return_index=True)
    fam = [(SubgroupSet.from_mask(G.commute[x]), int(x)) for x in first]
    fam.sort(key=lambda pair: pair[0].sort_key())
    return CentralizerFamily(G, tuple(c for c, _ in fam), tuple(w for _, w in fam))


def cent_count(G: CayleyGroup) -> int:
    return centralizer_family(G).count


def _commutator_closure(G: CayleyGroup, left: np.ndarray, right: np.ndarray) -> SubgroupSet:
    vals = np.unique(G.commutators[np.ix_(left, right)])
    return generated_subgroup(G, vals.tolist())


@memoized
def commutator_subgroup(G: CayleyGroup) -> SubgroupSet:
    """Subgroup generated by all commutators (not merely the commutator set)."""
    ar = np.arange(G.order)
    return _commutator_closure(G, ar, ar)


derived_subgroup = commutator_subgroup


def commutator_of(G: CayleyGroup, A: SubgroupSet, B: SubgroupSet) -> SubgroupSet:
    """``[A, B]`` inside ``G``."""
    return _commutator_closure(G, A.members, B.members)


@memoized
def derived_series(G: CayleyGroup) -> tuple[SubgroupSet, ...]:
    series = [G.full()]
    while True:
        m = series[-1].members
        nxt = _commutator_closure(G, m, m)
        if nxt == series[-1]:
            return tuple(series)
        series.append(nxt)


@memoized
def lower_central_series(G: CayleyGroup) -> tuple[SubgroupSet, ...]:
    series = [G.full()]
    ar = np.arange(G.order)
    while True:
        nxt = _commutator_closure(G, series[-1].members, ar)
        if nxt == series[-1]:
            return tuple(series)
        series.append(nxt)


def is_abelian(G: CayleyGroup) -> bool:
    return G.is_abelian


def is_perfect(G: CayleyGroup) -> bool:
    return commutator_subgroup(G).order == G.order


def is_solvable(G: CayleyGroup) -> bool:
    return derived_series(G)[-1].order == 1


def is_nilpotent(G: CayleyGroup) -> bool:
    return lower_central_series(G)[-1].order == 1


def nilpotency_class(G: CayleyGroup) -> int | None:
    series = lower_central_series(G)
    return len(series) - 1 if series[-1].order == 1 else None


def subgroup_is_abelian(G: CayleyGroup, S: SubgroupSet) -> bool:
    m = S.members
    return bool(G.commute[np.ix_(m, m)].all())


def subgroup_is_cyclic(G: CayleyGroup, S: SubgroupSet) -> bool:
    return int(G.element_orders[S.members].max()) == S.order


def subgroup_is_nilpotent(G: CayleyGroup, S: SubgroupSet) -> bool:
    """Lower central series of ``S`` computed inside ``G``'s table."""
    cur = S
    while cur.order > 1:
        nxt = _commutator_closure(G, cur.members, S.members)
        if nxt == cur:
            return False
        cur = nxt
    return True


def normalizer(G: CayleyGroup, H: SubgroupSet) -> SubgroupSet:
    conj = G.conjugation[:, H.members]
    return SubgroupSet.from_mask(H.mask[conj].all(axis=1))


# -- CG / CA -----------------------------------------------------------

def cg_counts(G: CayleyGroup) -> tuple[int, int]:
    """(|Cent(G)|, |G'|)."""
    return cent_count(G), commutator_subgroup(G).order


def is_cg(G: CayleyGroup) -> bool:
    cc, d = cg_counts(G)
    return cc == d + 2


def is_ca(G: CayleyGroup) -> bool:
    """Every centralizer of a non-central element is abelian."""
    Z = center(G)
    fam = centralizer_family(G)
    for C, x in zip(fam.distinct, fam.witness_for):
        if Z.mask[x]:
            continue
        if not subgroup_is_abelian(G, C):
            return False
    return True


def ca_partition_holds(G: CayleyGroup) -> bool:
    """Distinct proper centralizers pairwise intersect exactly in Z(G)."""
    Z = center(G)
    proper = [C for C in centralizer_family(G).distinct if not C.is_full()]
    for i, A in enumerate(proper):
        for B in proper[i + 1:]:
            if not np.array_equal(A.mask & B.mask, Z.mask):
                return False
    return True


@dataclass(frozen=True)
class InvolutionStats:
    i_count: int
    alpha: Fraction


def involution_stats(G: CayleyGroup) -> InvolutionStats:
    """Solutions of ``x^2 = 1`` (identity included) and their proportion."""
    sq = G.itable[np.arange(G.order), np.arange(G.order)]
    count = int((sq == 0).sum())
    return InvolutionStats(count, Fraction(count, G.order))


def central_coset_reps(G: CayleyGroup) -> np.ndarray:
    """Least element of each non-central coset of Z(G)."""
    Z = center(G)
    reps = np.unique(G.itable[:, Z.members].min(axis=1))
    return reps[1:]


def omega(G: CayleyGroup, budget: int = 10**7,
          quotient_cap: int = OMEGA_QUOTIENT_CAP) -> int:
    """Maximum number of pairwise non-commuting elements.

    Commuting is constant on cosets of Z(G), so the clique search runs on the
    non-central cosets.  Raises SearchBudgetExceeded (``best`` = lower bound)
    if the branch and bound does not finish.
    """
    if G.is_abelian:
        return 1
    reps = central_coset_reps(G)
    if len(reps) + 1 > quotient_cap:
        raise OrderCapExceeded(f"|G/Z| = {len(reps) + 1} exceeds omega cap {quotient_cap}")
    adj = ~G.commute[np.ix_(reps, reps)]
    try:
        return len(max_clique(adj, budget))
    except SearchBudgetExceeded as exc:
        raise SearchBudgetExceeded(str(exc), best=len(exc.best)) from None


def omega_clique(G: CayleyGroup, budget: int = 10**7) -> list[int]:
    """Element indices of one maximum pairwise non-commuting set."""
    if G.is_abelian:
        return [0]
    reps = central_coset_reps(G)
    adj = ~G.commute[np.ix_(reps, reps)]
    return [int(reps[i]) for i in max_clique(adj, budget)]


# -- lattices --------------------------------------------------------------

def _sorted(subs) -> list[SubgroupSet]:
    return sorted(subs, key=SubgroupSet.sort_key)


def normal_closure(G: CayleyGroup, seeds) -> SubgroupSet:
    conj = G.conjugation[:, np.asarray(list(seeds), dtype=np.intp)]
    return generated_subgroup(G, np.unique(conj).tolist())


def _product_mask(G: CayleyGroup, A: SubgroupSet, B: SubgroupSet) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[G.itable[np.ix_(A.members, B.members)].ravel()] = True
    return mask


@memoized
def normal_subgroups(G: CayleyGroup, budget: int = NORMAL_LATTICE_BUDGET) -> tuple[SubgroupSet, ...]:
    """All normal subgroups, as joins of normal closures of single elements."""
    atoms = {}
    for cls in conjugacy_classes(G):
        N = normal_closure(G, [cls[0]])
        atoms.setdefault(N.key, N)
    found = dict(atoms)
    queue = list(atoms.values())
    atom_list = list(atoms.values())
    while queue:
        N = queue.pop()
        for A in atom_list:
            if A.issubset(N):
                continue
            J = SubgroupSet.from_mask(_product_mask(G, N, A))
            if J.key not in found:
                found[J.key] = J
                queue.append(J)
                if len(found) > budget:
                    raise LatticeBudgetExceeded(f"more than {budget} normal subgroups")
    return tuple(_sorted(found.values()))


def cyclic_subgroups(G: CayleyGroup) -> list[tuple[int, SubgroupSet]]:
    """One (generator, subgroup) per cyclic subgroup, generator least in index."""
    seen = {}
    for x in range(G.order):
        C = generated_subgroup(G, [x])
        seen.setdefault(C.key, (x, C))
    return sorted(seen.values(), key=lambda p: p[1].sort_key())


@memoized
def all_subgroups(G: CayleyGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> tuple[SubgroupSet, ...]:
    """Full subgroup lattice as the join-closure of cyclic subgroups."""
    if G.order > lattice_cap:
        raise OrderCapExceeded(f"subgroup lattice needs |G| <= {lattice_cap}")
    cyc = cyclic_subgroups(G)
    found = {C.key: C for _, C in cyc}
    queue = [C for _, C in cyc]
    while queue:
        H = queue.pop()
        for x, C in cyc:
            if H.mask[x]:
                continue
            J = generated_subgroup(G, [x], start=H)
            if J.key not in found:
                found[J.key] = J
                queue.append(J)
    return tuple(_sorted(found.values()))


def is_prime(n: int) -> bool:
    return n > 1 and factorint(n) == {n: 1}


def prime_factors(n: int) -> list[int]:
    """Prime factors with multiplicity, ascending."""
    return [p for p, e in sorted(factorint(n).items()) for _ in range(e)]


def abelian_normal_prime_index(G: CayleyGroup) -> SubgroupSet | None:
    for N in normal_subgroups(G):
        if is_prime(G.order // N.order) and subgroup_is_abelian(G, N):
            return N
    return None


def sylow_subgroup(G: CayleyGroup, p: int) -> SubgroupSet:
    """Grow a p-subgroup through p-elements of its normalizer until it is Sylow."""
    n = G.order
    target = p ** factorint(n).get(p, 0)
    orders = G.element_orders
    is_p_elem = np.array([_p_log(int(o), p) >= 0 for o in orders])
    P = G.trivial()
    while P.order < target:
        N = normalizer(G, P)
        cand = np.flatnonzero(N.mask & ~P.mask & is_p_elem)
        if cand.size == 0:
            raise AssertionError("no p-element in the normalizer; Sylow growth failed")
        P = generated_subgroup(G, [int(cand[0])], start=P)
    return P


def _p_log(o: int, p: int) -> int:
    k = 0
    while o % p == 0:
        o //= p
        k += 1
    return k if o == 1 else -1


def all_sylow_abelian(G: CayleyGroup) -> bool:
    return all(subgroup_is_abelian(G, sylow_subgroup(G, p)) for p in factorint(G.order))


# -- minimality predicates --------------------------------------------------

@memoized
def is_minimal_nonabelian(G: CayleyGroup) -> bool:
    """Non-abelian and every non-commuting pair generates G."""
    if G.is_abelian:
        return False
    gens = [x for x, _ in cyclic_subgroups(G)]
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            if not G.commute[x, y] and generated_subgroup(G, [x, y]).order != G.order:
                return False
    return True


@memoized
def is_minimal_nonnilpotent(G: CayleyGroup) -> bool:
    """Non-nilpotent with every proper 2-generated subgroup nilpotent.

    Checking 2-generated subgroups suffices: a non-nilpotent group contains a
    minimal non-nilpotent (Schmidt) subgroup, and Schmidt groups are
    2-generated.
    """
    if is_nilpotent(G):
        return False
    gens = [x for x, _ in cyclic_subgroups(G)]
    seen = set()
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            if G.commute[x, y]:
                continue
            H = generated_subgroup(G, [x, y])
            if H.order == G.order or H.key in seen:
                continue
            seen.add(H.key)
            if not subgroup_is_nilpotent(G, H):
                return False
    return True


def is_minimal_nonnilpotent_lattice(G: CayleyGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> bool:
    """Same predicate by scanning the full subgroup lattice (cross-check)."""
    if is_nilpotent(G):
        return False
    return all(subgroup_is_nilpotent(G, H) for H in all_subgroups(G, lattice_cap) if not H.is_full())


@memoized
def is_metacyclic(G: CayleyGroup) -> bool:
    """Some cyclic normal N has cyclic quotient."""
    for N in normal_subgroups(G):
        if not subgroup_is_cyclic(G, N):
            continue
        index = G.order // N.order
        if index == 1:
            return True
        Q, _ = quotient_group(G, N)
        if int(Q.element_orders.max()) == index:
            return True
    return False


def isaacs_identity_check(G: CayleyGroup) -> list[tuple[SubgroupSet, bool]]:
    """For abelian normal A with cyclic G/A check ``|A| = |G'| |A n Z(G)|``."""
    D = commutator_subgroup(G)
    Z = center(G)
    out = []
    for A in normal_subgroups(G):
        if not subgroup_is_abelian(G, A):
            continue
        Q, _ = quotient_group(G, A)
        if int(Q.element_orders.max()) != Q.order:
            continue
        out.append((A, A.order == D.order * A.intersection(Z).order))
    return out


@memoized
def self_normalizing_nonabelian(G: CayleyGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> bool:
    """Every non-abelian subgroup H satisfies N_G(H) = H."""
    # 2-generated subgroups first: any failure there is final
    gens = [x for x, _ in cyclic_subgroups(G)]
    seen = set()
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            if G.commute[x, y]:
                continue
            H = generated_subgroup(G, [x, y])
            if H.key in seen:
                continue
            seen.add(H.key)
            if normalizer(G, H) != H:
                return False
    for H in all_subgroups(G, lattice_cap):
        if H.key in seen or subgroup_is_abelian(G, H):
            continue
        if normalizer(G, H) != H:
            return False
    return True


def central_quotient(G: CayleyGroup) -> tuple[CayleyGroup, np.ndarray]:
    key = ("central_quotient",)
    if key not in G._memo:
        G._memo[key] = quotient_group(G, center(G))
    return G._memo[key]


def derived_meets_center_trivially(G: CayleyGroup) -> bool:
    return commutator_subgroup(G).intersection(center(G)).order == 1


# -- report -----------------------------------------------------------------

@dataclass
class AnalysisReport:
    order: int
    z_order: int
    derived_order: int
    cent_count: int
    is_cg: bool
    is_ca: bool
    is_perfect: bool
    is_nilpotent: bool
    is_solvable: bool
    is_abelian: bool
    alpha: Fraction
    omega: int | None
    omega_note: str | None
    flags: dict[str, bool | None]
    notes: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "zOrder": self.z_order,
            "derivedOrder": self.derived_order,
            "centCount": self.cent_count,
            "isCG": self.is_cg,
            "isCA": self.is_ca,
            "isPerfect": self.is_perfect,
            "isNilpotent": self.is_nilpotent,
            "isSolvable": self.is_solvable,
            "isAbelian": self.is_abelian,
            "alpha": {"num": self.alpha.numerator, "den": self.alpha.denominator},
            "omega": self.omega,
            "omegaNote": self.omega_note,
            "flags": dict(self.flags),
            "notes": dict(self.notes),
        }


FLAG_NAMES = ("minimalNonAbelian", "minimalNonNilpotent", "metacyclic", "allSylowAbelian",
              "hasAbelianNormalPrimeIndex", "derivedMeetsCenterTrivially")


def analyze(G: CayleyGroup, omega_budget: int = 200_000) -> AnalysisReport:
    cc, d = cg_counts(G)
    notes: dict[str, str] = {}
    om: int | None = None
    om_note = None
    try:
        om = omega(G, omega_budget)
    except SearchBudgetExceeded as exc:
        om_note = f"search budget {omega_budget} exhausted; lower bound {exc.best}"
    except OrderCapExceeded as exc:
        om_note = str(exc)

    checks = {
        "minimalNonAbelian": is_minimal_nonabelian,
        "minimalNonNilpotent": is_minimal_nonnilpotent,
        "metacyclic": is_metacyclic,
        "allSylowAbelian": all_sylow_abelian,
        "hasAbelianNormalPrimeIndex": lambda g: abelian_normal_prime_index(g) is not None,
        "derivedMeetsCenterTrivially": derived_meets_center_trivially,
    }
    flags: dict[str, bool | None] = {}
    for name, fn in checks.items():
        try:
            flags[name] = bool(fn(G))
        except CentsetError as exc:  # reported per field, never fatal
            flags[name] = None
            notes[name] = f"{type(exc).__name__}: {exc}"
    return AnalysisReport(
        order=G.order,
        z_order=center(G).order,
        derived_order=d,
        cent_count=cc,
        is_cg=cc == d + 2,
        is_ca=is_ca(G),
        is_perfect=d == G.order,
        is_nilpotent=is_nilpotent(G),
        is_solvable=is_solvable(G),
        is_abelian=G.is_abelian,
        alpha=involution_stats(G).alpha,
        omega=om,
        omega_note=om_note,
        flags=flags,
        notes=notes,
    )
