"""Registry of checkable statements about centralizer counts.

Each claim pairs a builder description with a check that returns a JSON-like
value; the claim is Confirmed exactly when that value equals the expected one.
Quantified claims run over :mod:`centset.catalog` and report the names of the
members that violate the statement, so their expected value is ``[]``.
"""

from __future__ import annotations

import csv
import fnmatch
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from sympy import factorint

from . import families as fam
from . import gf
from .analysis import (
    all_sylow_abelian,
    abelian_normal_prime_index,
    ca_partition_holds,
    cent_count,
    center,
    central_quotient,
    commutator_subgroup,
    derived_meets_center_trivially,
    involution_stats,
    is_ca,
    is_cg,
    is_metacyclic,
    is_minimal_nonabelian,
    is_minimal_nonnilpotent,
    is_perfect,
    is_solvable,
    isaacs_identity_check,
    normal_subgroups,
    omega,
    self_normalizing_nonabelian,
    subgroup_is_abelian,
    subgroup_is_cyclic,
)
from .catalog import build_catalog
from .core import CayleyGroup, direct_product, subgroup_as_group
from .errors import OrderCapExceeded, SearchBudgetExceeded
from .frobenius import decompose, frobenius_quotient_shape, is_frobenius, is_minimal_frobenius
from .iso import are_isomorphic
from .isoclinism import are_isoclinic, isoclinic_to_derived

STATUSES = ("Confirmed", "Refuted", "Error", "Skipped")


class SkipClaim(Exception):
    """Raised by a check whose hypothesis matched nothing it can test."""


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    anchor: str
    builders: tuple[str, ...]
    predicate: str
    expected: Any
    check: Callable[[], tuple[Any, str]] = field(repr=False, compare=False)


@dataclass(frozen=True)
class ClaimResult:
    id: str
    description: str
    anchor: str
    builders: tuple[str, ...]
    predicate: str
    expected: Any
    computed: Any
    status: str
    detail: str
    runtime_ms: int

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        d = {
            "id": self.id,
            "description": self.description,
            "anchor": self.anchor,
            "builders": list(self.builders),
            "predicate": self.predicate,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "detail": self.detail,
        }
        if timings:
            d["runtimeMs"] = self.runtime_ms
        return d


@dataclass(frozen=True)
class ClaimReport:
    results: tuple[ClaimResult, ...]

    def counts(self) -> dict[str, int]:
        return {s: sum(r.status == s for r in self.results) for s in STATUSES}

    @property
    def any_refuted(self) -> bool:
        return any(r.status == "Refuted" for r in self.results)

    @property
    def any_error(self) -> bool:
        return any(r.status == "Error" for r in self.results)


# -- small helpers ----------------------------------------------------------

def _q(q: int):
    return gf.field_from_q(q)


def _quotient(G: CayleyGroup) -> CayleyGroup:
    return central_quotient(G)[0]


def _is_p_power(n: int) -> bool:
    return n > 1 and len(factorint(n)) == 1


def _omega_count(n: int) -> int:
    """Number of prime factors with multiplicity."""
    return sum(factorint(n).values())


def _is_cp_cp(Q: CayleyGroup, p: int) -> bool:
    return Q.order == p * p and Q.is_abelian and int(Q.element_orders.max()) == p


def _derived_abelian(G: CayleyGroup) -> bool:
    return subgroup_is_abelian(G, commutator_subgroup(G))


def _derived_group(G: CayleyGroup) -> CayleyGroup:
    return subgroup_as_group(G, commutator_subgroup(G))[0]


def _over_catalog(select: Callable[[CayleyGroup], bool],
                  holds: Callable[[CayleyGroup], bool]) -> tuple[list[str], str]:
    checked, bad = 0, []
    for name, G in build_catalog():
        if not select(G):
            continue
        checked += 1
        if not holds(G):
            bad.append(name)
    if checked == 0:
        raise SkipClaim("no catalog member satisfies the hypothesis")
    return bad, f"{checked} catalog groups satisfy the hypothesis"


def _table(builders: dict[str, Callable[[], CayleyGroup]],
           value: Callable[[CayleyGroup], Any]) -> tuple[dict[str, Any], str]:
    return {k: value(b()) for k, b in builders.items()}, f"{len(builders)} groups"


def _cg_of(builders):
    return lambda: _table(builders, is_cg)


def _count_of(builder):
    def check():
        G = builder()
        cc, d = cent_count(G), commutator_subgroup(G).order
        return cc, f"|Cent| = {cc}, |G'| = {d}, |G| = {G.order}"
    return check


def _frob_shape(G: CayleyGroup):
    """Lifted Frobenius shape of G/Z, or None when G/Z is not Frobenius."""
    if G.is_abelian:
        return None
    return frobenius_quotient_shape(G)


# -- catalog predicates -------------------------------------------------------

def _nonabelian(G):
    return not G.is_abelian


def _pqr(G):
    return _nonabelian(G) and _omega_count(G.order) == 3


def _p4(G):
    f = factorint(G.order)
    return _nonabelian(G) and len(f) == 1 and next(iter(f.values())) == 4 and next(iter(f)) in (2, 3)


def _isaacs_all(G):
    return all(ok for _, ok in isaacs_identity_check(G))


def _alpha_hyp(G):
    n = G.order
    odd = n
    while odd % 2 == 0:
        odd //= 2
    return odd > 1 and involution_stats(G).alpha * 2 > 1


def _cg20_equiv(G):
    return is_cg(G) == is_cg(_quotient(G))


def _central_quotient_pqr(G):
    return _nonabelian(G) and _omega_count(_quotient(G).order) == 3


def _central_quotient_perfect(G):
    return _nonabelian(G) and is_perfect(_quotient(G))


def _smallest_prime_derived(G):
    return _nonabelian(G) and commutator_subgroup(G).order == min(factorint(G.order))


def _cg10_holds(G):
    p = min(factorint(G.order))
    return is_cg(G) == _is_cp_cp(_quotient(G), p)


def _odd_metacyclic_pgroup(G):
    f = factorint(G.order)
    return _nonabelian(G) and len(f) == 1 and min(f) > 2 and is_metacyclic(G)


def _cg191_omega(G):
    p = min(factorint(G.order))
    return omega(G) * p == commutator_subgroup(G).order * (1 + p)


def _cg191_equiv(G):
    p = min(factorint(G.order))
    return is_cg(G) == _is_cp_cp(_quotient(G), p)


def _has_abelian_prime_index(G):
    return _nonabelian(G) and abelian_normal_prime_index(G) is not None


def _cg7b(G):
    o = set(_quotient(G).element_orders[1:].tolist())
    return len(o) == 1 and _omega_count(o.pop()) == 1


def _cg7b_hyp(G):
    return _has_abelian_prime_index(G) and _quotient(G).is_abelian


def _cg7c_hyp(G):
    return _has_abelian_prime_index(G) and not _quotient(G).is_abelian


def _cg7c_count_hyp(G):
    return _cg7c_hyp(G) and _is_p_power(_quotient(G).order)


def _cg7c_count(G):
    f = factorint(_quotient(G).order)
    (p, r), = f.items()
    return cent_count(G) == p ** (r - 1) + 2


def _omega_within_budget(G) -> int | None:
    key = ("omega_budgeted",)
    if key not in G._memo:
        try:
            G._memo[key] = omega(G, budget=200_000, quotient_cap=200)
        except (SearchBudgetExceeded, OrderCapExceeded):
            G._memo[key] = None
    return G._memo[key]


def _ca_omega_hyp(G):
    # groups whose omega is not decided within budget are outside the hypothesis
    return _nonabelian(G) and _omega_within_budget(G) is not None


def _ca_omega(G):
    return is_ca(G) == (cent_count(G) == _omega_within_budget(G) + 1)


def _normal_sylow(G) -> int:
    """Order of the normal Sylow subgroup of a minimal non-abelian non-p-group."""
    for p, e in sorted(factorint(G.order).items()):
        q = p ** e
        if any(N.order == q for N in normal_subgroups(G)):
            return q
    raise AssertionError("minimal non-abelian group without a normal Sylow subgroup")


def _cg6a_count(G):
    f = factorint(G.order)
    if len(f) == 1:
        return cent_count(G) == min(f) + 2
    q = _normal_sylow(G)
    return cent_count(G) == cent_count(_quotient(G)) == q + 2


def _cg6b(G):
    f = factorint(G.order)
    if len(f) == 1:
        return _is_cp_cp(_quotient(G), min(f))
    return is_cg(_quotient(G))


def _frob_decomp(G):
    key = ("claims_decomposition",)
    if key not in G._memo:
        G._memo[key] = decompose(G, with_minimal=False) if _nonabelian(G) and is_frobenius(G) else None
    return G._memo[key]


def _cg1a_hyp(G):
    return _frob_decomp(G) is not None and is_minimal_frobenius(G) is True


def _cg1b_hyp(G):
    d = _frob_decomp(G)
    return d is not None and d.kernel_cyclic


def _cg1c_hyp(G):
    d = _frob_decomp(G)
    return d is not None and d.complement_abelian is True


def _cg3_hyp(G):
    return is_ca(G) and (center(G).order == 1 or G.is_abelian)


def _cg3_holds(G):
    d = _frob_decomp(G)
    shape = d is not None and d.kernel_abelian and d.complement_cyclic is True
    return is_cg(G) == shape


def _shape_kh_abelian(G):
    s = _frob_shape(G)
    return s is not None and s.kernel_lift_abelian and s.complement_lift_abelian is True


def _shape_h_abelian_derived_abelian(G):
    s = _frob_shape(G)
    return s is not None and s.complement_lift_abelian is True and _derived_abelian(G)


def _shape_minimal_derived_abelian(G):
    if _frob_shape(G) is None or not _derived_abelian(G):
        return False
    return is_minimal_frobenius(_quotient(G)) is True


def _shape_cyclic_kernel(G):
    s = _frob_shape(G)
    return s is not None and s.quotient.kernel_cyclic


def _cg112_hyp(G):
    d = commutator_subgroup(G).order
    return _nonabelian(G) and len(factorint(d)) == 1 and sum(factorint(d).values()) == 1 \
        and derived_meets_center_trivially(G)


def _central_order_kind(n: int) -> str | None:
    f = sorted(factorint(n).items())
    if [e for _, e in f] == [1, 1, 1]:
        return "pqr"
    if len(f) == 2:
        (p, a), (q, b) = f
        if (a, b) == (2, 1):
            return "p2q"
        if (a, b) == (1, 2):
            return "pq2"
    return None


def _cg11_hyp(G):
    return _nonabelian(G) and _central_order_kind(_quotient(G).order) in ("pqr", "p2q")


def _cg14_hyp(G):
    return _nonabelian(G) and _central_order_kind(_quotient(G).order) in ("pqr", "pq2")


def _cg15_hyp(G):
    f = factorint(_quotient(G).order)
    return _nonabelian(G) and len(f) == 1 and next(iter(f.values())) == 3


def _cg15_holds(G):
    return is_cg(G) == (abelian_normal_prime_index(G) is not None)


def _cg9_hyp(G):
    return (_nonabelian(G) and is_solvable(G)
            and self_normalizing_nonabelian(G))


_S4 = None


def _s4():
    global _S4
    if _S4 is None:
        _S4 = fam.symmetric(4)
    return _S4


def _cg12_hyp(G):
    Q = _quotient(G)
    return Q.order == 24 and are_isomorphic(Q, _s4())


def _cg12_holds(G):
    D = _derived_group(G)
    return is_cg(G) == (D.order == 12 and are_isomorphic(D, fam.alternating(4)))


def _min_nonnilpotent(G):
    return _nonabelian(G) and is_minimal_nonnilpotent(G)


def _cg203_hyp(G):
    return _nonabelian(G) and is_minimal_nonnilpotent(_quotient(G)) and _derived_abelian(G)


def _cg23_hyp(G):
    Q = _quotient(G)
    return (_nonabelian(G) and not _is_p_power(Q.order) and is_minimal_nonabelian(Q)
            and _derived_abelian(G))


def _ex2_hyp(G):
    """G/Z non-abelian and split as C_n x| C_p with the cyclic part normal."""
    if G.is_abelian:
        return False
    Q = _quotient(G)
    for N in normal_subgroups(Q):
        idx = Q.order // N.order
        if N.order == Q.order or len(factorint(idx)) != 1 or sum(factorint(idx).values()) != 1:
            continue
        if not subgroup_is_cyclic(Q, N):
            continue
        outside = [x for x in range(Q.order) if not N.mask[x] and Q.element_orders[x] == idx]
        if outside:
            return True
    return False


# -- registry -----------------------------------------------------------------

def _catalog_claim(cid, description, anchor, predicate, select, holds):
    return Claim(cid, description, anchor, ("catalog(order <= 200)",), predicate, [],
                 lambda: _over_catalog(select, holds))


def _conj_counterexample():
    S3 = fam.symmetric(3)
    out = {}
    notes = []
    for name, G in (("Heis(3)", fam.heisenberg(3)), ("Mod_3(3)", fam.modular_p(3, 3))):
        v = are_isoclinic(G, S3)
        out[name] = {
            "cent": cent_count(G),
            "centS3": cent_count(S3),
            "derived": commutator_subgroup(G).order,
            "derivedS3": commutator_subgroup(S3).order,
            "isoclinic": v.isoclinic,
        }
        if not v.pruned and not v.isoclinic:
            notes.append(f"{name}: exhaustive search")
        notes.append(f"{name}: {v.reason}")
    return out, "; ".join(notes)


def _cg118_check():
    builders = {
        "A5": fam.alternating(5),
        "C2xA5": direct_product(fam.cyclic(2), fam.alternating(5)),
        "SL(2,5)": gf.sl2(_q(5)),
        "PSL(2,7)": gf.psl2(_q(7)),
    }
    out = {}
    for name, G in builders.items():
        if not is_perfect(_quotient(G)):
            raise AssertionError(f"{name}: central quotient is not perfect")
        out[name] = isoclinic_to_derived(G).isoclinic
    return out, "isoclinism certificates found by search and re-verified"


def _registry() -> list[Claim]:
    C: list[Claim] = []
    add = C.append

    dm = [(3, 2), (4, 2), (5, 4), (6, 2), (3, 4), (4, 4), (5, 6), (7, 4), (3, 8), (9, 4), (6, 6)]
    add(Claim("EX111", "generalized dihedral groups are CG",
              "D(m,n) = <a,b | a^m = b^n = 1, b a b^-1 = a^-1>, m >= 3, n even: CG",
              tuple(f"generalized_dihedral(m={m},n={n})" for m, n in dm), "is_cg",
              {f"D({m},{n})": True for m, n in dm},
              _cg_of({f"D({m},{n})": (lambda m=m, n=n: fam.generalized_dihedral(m, n)) for m, n in dm})))
    add(Claim("EX1", "dihedral groups D_2n (n = 3..12) are CG", "D_2n, n >= 3: CG",
              tuple(f"dihedral(n={n})" for n in range(3, 13)), "is_cg",
              {f"D{2 * n}": True for n in range(3, 13)},
              _cg_of({f"D{2 * n}": (lambda n=n: fam.dihedral(n)) for n in range(3, 13)})))

    def ex2_u6n():
        out = {}
        for n in range(1, 9):
            G = fam.u6n(n)
            out[f"U{6 * n}"] = are_isomorphic(_quotient(G), fam.symmetric(3)) and is_cg(G)
        return out, "value = (G/Z isomorphic to S3) and CG"
    add(Claim("EX2-u6n", "U_6n: central quotient is C3 x| C2 and the group is CG",
              "G/Z = C_n x| C_p non-abelian => CG", tuple(f"u6n(n={n})" for n in range(1, 9)),
              "central_quotient_iso_S3 and is_cg", {f"U{6 * n}": True for n in range(1, 9)}, ex2_u6n))
    add(_catalog_claim("EX2-catalog", "catalog groups whose central quotient is C_n x| C_p are CG",
                       "G/Z = C_n x| C_p non-abelian => CG", "is_cg", _ex2_hyp, is_cg))
    add(Claim("EX12", "generalized quaternion groups Q_4m (m = 2..8) are CG",
              "Q_4m = <a,b | a^2m = 1, b^2 = a^m, b a b^-1 = a^-1>, m >= 2: CG",
              tuple(f"generalized_quaternion(m={m})" for m in range(2, 9)), "is_cg",
              {f"Q{4 * m}": True for m in range(2, 9)},
              _cg_of({f"Q{4 * m}": (lambda m=m: fam.generalized_quaternion(m)) for m in range(2, 9)})))
    add(_catalog_claim("EX3", "order 2^n m with odd m > 1 and alpha > 1/2 implies CG",
                       "|G| = 2^n m, m > 1 odd, alpha(G) > 1/2 => CG", "is_cg", _alpha_hyp, is_cg))
    add(Claim("EX5", "semidihedral groups SD_2^n (n = 4..7) are CG",
              "SD_2^n = <x,y | x^(2^(n-1)) = y^2 = 1, y x y^-1 = x^(2^(n-2)-1)>: CG",
              tuple(f"semidihedral(n={n})" for n in range(4, 8)), "is_cg",
              {f"SD{2 ** n}": True for n in range(4, 8)},
              _cg_of({f"SD{2 ** n}": (lambda n=n: fam.semidihedral(n)) for n in range(4, 8)})))
    add(Claim("EX5-n3", "the semidihedral presentation at n = 3 is CG",
              "SD_2^n CG for n >= 3 (n = 3 instance)", ("semidihedral(n=3)",), "is_cg",
              {"SD8": True},
              lambda: ({"SD8": is_cg(fam.semidihedral(3))},
                       f"presentation gives an abelian group: {fam.semidihedral(3).is_abelian}")))
    mods = [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (5, 3)]
    add(Claim("EX6", "modular p-groups Mod_n(p) are CG",
              "Mod_n(p) = <x,y | x^(p^(n-1)) = y^p = 1, y x y^-1 = x^(1+p^(n-2))>, n >= 3: CG",
              tuple(f"modular_p(p={p},n={n})" for p, n in mods), "is_cg",
              {f"Mod_{n}({p})": True for p, n in mods},
              _cg_of({f"Mod_{n}({p})": (lambda p=p, n=n: fam.modular_p(p, n)) for p, n in mods})))
    add(Claim("EX7", "U_6n (n = 1..8) is CG", "U_6n = <x,y | x^2n = y^3 = 1, x^-1 y x = y^-1>: CG",
              tuple(f"u6n(n={n})" for n in range(1, 9)), "is_cg",
              {f"U{6 * n}": True for n in range(1, 9)},
              _cg_of({f"U{6 * n}": (lambda n=n: fam.u6n(n)) for n in range(1, 9)})))

    add(Claim("EX9-count", "|Cent(GL(2,q))| = q^2+q+2 for q = 3, 4, 5",
              "|Cent(GL(2,q))| = q^2 + q + 2 for q > 2", tuple(f"gl2(q={q})" for q in (3, 4, 5)),
              "cent_count", {f"q={q}": q * q + q + 2 for q in (3, 4, 5)},
              lambda: _table({f"q={q}": (lambda q=q: gf.gl2(_q(q))) for q in (3, 4, 5)}, cent_count)))
    add(Claim("EX9-cg", "GL(2,q) is CG iff q = 2", "GL(2,q) CG <=> q = 2",
              tuple(f"gl2(q={q})" for q in (2, 3, 4, 5)), "is_cg",
              {f"q={q}": q == 2 for q in (2, 3, 4, 5)},
              _cg_of({f"q={q}": (lambda q=q: gf.gl2(_q(q))) for q in (2, 3, 4, 5)})))

    add(Claim("EX22-q2", "SL(2,2) is CG: |Cent| = |G'| + 2 = 5",
              "|Cent(SL(2,q))| = |SL(2,q)'| + 2 for q in {2, 3}",
              ("sl2(q=2)",), "cent_count", 5, _count_of(lambda: gf.sl2(_q(2)))))
    add(Claim("EX22-q3", "SL(2,3) is CG: |Cent| = |Q8| + 2 = 10",
              "|Cent(SL(2,q))| = |SL(2,q)'| + 2 for q in {2, 3}",
              ("sl2(q=3)",), "cent_count", 10, _count_of(lambda: gf.sl2(_q(3)))))
    add(Claim("EX22-large", "SL(2,q) is not CG for q = 4, 5", "SL(2,q) CG <=> q in {2, 3}",
              ("sl2(q=4)", "sl2(q=5)"), "is_cg", {"q=4": False, "q=5": False},
              _cg_of({f"q={q}": (lambda q=q: gf.sl2(_q(q))) for q in (4, 5)})))

    pgl = {2: 5, 3: 14, 4: 22, 5: 57, 7: 2 * 49 + 7 + 2}
    for q, v in pgl.items():
        anchor = {2: "|Cent(PGL(2,2))| = 5", 3: "|Cent(PGL(2,3))| = 14", 4: "|Cent(PGL(2,4))| = 22",
                  5: "|Cent(PGL(2,5))| = 57", 7: "|Cent(PGL(2,q))| = 2q^2 + q + 2, q odd > 3"}[q]
        add(Claim(f"EX25-q{q}", f"|Cent(PGL(2,{q}))| = {v}", anchor, (f"pgl2(q={q})",),
                  "cent_count", v, _count_of(lambda q=q: gf.pgl2(_q(q)))))
    add(Claim("PGL-formula-q8", "|Cent(PGL(2,8))| = q^2+q+2 = 74",
              "|Cent(PGL(2,q))| = q^2 + q + 2, q even > 4", ("pgl2(q=8)",), "cent_count", 74,
              _count_of(lambda: gf.pgl2(_q(8)))))
    add(Claim("PGL-formula-q9", "|Cent(PGL(2,9))| = 2q^2+q+2 = 173",
              "|Cent(PGL(2,q))| = 2q^2 + q + 2, q odd > 3", ("pgl2(q=9)",), "cent_count", 173,
              _count_of(lambda: gf.pgl2(_q(9)))))
    qs = (2, 3, 4, 5, 7)
    add(Claim("EX227", "PGL(2,q) is CG iff q <= 3", "PGL(2,q) CG <=> q in {2, 3}",
              tuple(f"pgl2(q={q})" for q in qs), "is_cg", {f"q={q}": q <= 3 for q in qs},
              _cg_of({f"q={q}": (lambda q=q: gf.pgl2(_q(q))) for q in qs})))
    add(Claim("EX2223", "S5 is not CG", "|Cent(S5)| != |S5'| + 2", ("symmetric(n=5)",), "is_cg", False,
              lambda: (is_cg(fam.symmetric(5)), "|Cent(S5)| = %d, |S5'| = %d" % (
                  cent_count(fam.symmetric(5)), commutator_subgroup(fam.symmetric(5)).order))))
    qs = (2, 3, 4, 5, 7, 8, 9)
    add(Claim("EX228", "PSL(2,q) is CG iff q <= 3", "PSL(2,q) CG <=> q in {2, 3}",
              tuple(f"psl2(q={q})" for q in qs), "is_cg", {f"q={q}": q <= 3 for q in qs},
              _cg_of({f"q={q}": (lambda q=q: gf.psl2(_q(q))) for q in qs})))

    add(_catalog_claim("CG20", "|G' n Z| = 1 implies (G CG <=> G/Z CG)",
                       "|G' n Z(G)| = 1 => (G CG <=> G/Z(G) CG)", "is_cg(G) == is_cg(G/Z)",
                       lambda G: _nonabelian(G) and derived_meets_center_trivially(G), _cg20_equiv))
    add(_catalog_claim("CG22", "abelian Sylow subgroups imply (G CG <=> G/Z CG)",
                       "all Sylow subgroups abelian => (G CG <=> G/Z(G) CG)", "is_cg(G) == is_cg(G/Z)",
                       lambda G: _nonabelian(G) and all_sylow_abelian(G), _cg20_equiv))
    add(_catalog_claim("rem144", "|G/Z| a product of three primes implies CA",
                       "|G/Z(G)| = pqr (primes, repetition allowed) => C(x) abelian for x outside Z(G)",
                       "is_ca", _central_quotient_pqr, is_ca))
    add(_catalog_claim("rem1", "CA groups: distinct proper centralizers meet in Z",
                       "CA => C(x) n C(y) = Z(G) for distinct proper centralizers",
                       "ca_partition_holds", lambda G: _nonabelian(G) and is_ca(G), ca_partition_holds))
    add(Claim("CG118", "perfect central quotient implies G isoclinic to G'",
              "G/Z(G) perfect => G and G' isoclinic", ("alternating(n=5)", "C2 x alternating(n=5)",
                                                       "sl2(q=5)", "psl2(q=7)"),
              "are_isoclinic(G, G')", {"A5": True, "C2xA5": True, "SL(2,5)": True, "PSL(2,7)": True},
              _cg118_check))
    add(_catalog_claim("CG111", "perfect central quotient implies not CG",
                       "G/Z(G) perfect => G not CG", "not is_cg", _central_quotient_perfect,
                       lambda G: not is_cg(G)))
    add(_catalog_claim("CG10", "|G'| = smallest prime p: CG <=> G/Z = Cp x Cp",
                       "|G'| = p smallest prime divisor of |G| => (CG <=> G/Z(G) = C_p x C_p)",
                       "is_cg(G) == (G/Z ~ Cp x Cp)", _smallest_prime_derived, _cg10_holds))
    add(_catalog_claim("CG191-omega", "odd metacyclic p-groups: omega = |G'|(1+p)/p",
                       "omega(G) = |G'|(1+p)/p for non-abelian metacyclic p-groups, p > 2",
                       "omega", _odd_metacyclic_pgroup, _cg191_omega))
    add(_catalog_claim("CG191", "odd metacyclic p-groups: CG <=> G/Z = Cp x Cp",
                       "non-abelian metacyclic p-group, p > 2: CG <=> G/Z(G) = C_p x C_p",
                       "is_cg(G) == (G/Z ~ Cp x Cp)", _odd_metacyclic_pgroup, _cg191_equiv))
    add(_catalog_claim("CG7a", "abelian normal subgroup of prime index implies CG",
                       "abelian normal subgroup of prime index => CG", "is_cg",
                       _has_abelian_prime_index, is_cg))
    add(_catalog_claim("CG7b", "... and abelian G/Z is elementary abelian",
                       "abelian normal subgroup of prime index, G/Z(G) abelian => elementary abelian",
                       "G/Z elementary abelian", _cg7b_hyp, _cg7b))
    add(_catalog_claim("CG7c", "... and non-abelian G/Z is CG",
                       "abelian normal subgroup of prime index, G/Z(G) non-abelian => G/Z(G) CG",
                       "is_cg(G/Z)", _cg7c_hyp, lambda G: is_cg(_quotient(G))))
    add(_catalog_claim("CG7c-count", "... with |G/Z| = p^r gives |Cent(G)| = p^(r-1) + 2",
                       "|G/Z(G)| = p^r => |Cent(G)| = p^(r-1) + 2", "cent_count",
                       _cg7c_count_hyp, _cg7c_count))
    add(_catalog_claim("CA-omega", "CA <=> |Cent(G)| = omega(G) + 1 where omega is decided within budget",
                       "|Cent(G)| = omega(G) + 1 <=> G is CA", "is_ca == (cent == omega + 1)",
                       _ca_omega_hyp, _ca_omega))
    add(_catalog_claim("CG6a", "minimal non-abelian groups are CG",
                       "minimal non-abelian => CG", "is_cg", is_minimal_nonabelian, is_cg))
    add(_catalog_claim("CG6a-count", "minimal non-abelian: |Cent| = p+2, or |Cent(G)| = |Cent(G/Z)| = |Q|+2",
                       "minimal non-abelian p-group: |Cent(G)| = p + 2; otherwise |Q| + 2 with Q the normal Sylow",
                       "cent_count", is_minimal_nonabelian, _cg6a_count))
    add(_catalog_claim("CG6b", "minimal non-abelian: G/Z = Cp x Cp, or G/Z is CG",
                       "minimal non-abelian: p-group => G/Z(G) = C_p x C_p, otherwise G/Z(G) CG",
                       "central quotient shape", is_minimal_nonabelian, _cg6b))
    add(_catalog_claim("CG1a", "minimal Frobenius groups are CG", "minimal Frobenius => CG",
                       "is_cg", _cg1a_hyp, is_cg))
    add(_catalog_claim("CG1b", "Frobenius groups with cyclic kernel are CG",
                       "Frobenius with cyclic kernel => CG", "is_cg", _cg1b_hyp, is_cg))
    add(_catalog_claim("CG1c", "Frobenius with abelian complement: CG <=> G' abelian",
                       "Frobenius with abelian complement: CG <=> G' abelian", "is_cg == G' abelian",
                       _cg1c_hyp, lambda G: is_cg(G) == _derived_abelian(G)))
    add(_catalog_claim("CG3", "all non-identity centralizers abelian: CG <=> Frobenius, abelian kernel, cyclic complement",
                       "C(x) abelian for x != 1: CG <=> Frobenius with abelian kernel and cyclic complement",
                       "is_cg == frobenius shape", _cg3_hyp, _cg3_holds))
    add(_catalog_claim("CG4", "non-abelian groups of order pqr are CG",
                       "non-abelian of order pqr (primes, repetition allowed) => CG", "is_cg", _pqr, is_cg))
    add(_catalog_claim("CG5", "non-abelian groups of order p^4 (p = 2, 3) are CG",
                       "non-abelian of order p^4 => CG", "is_cg", _p4, is_cg))
    add(_catalog_claim("isaacs", "|A| = |G'| |A n Z| for abelian normal A with cyclic G/A",
                       "A normal abelian, G/A cyclic => |A| = |G'| |A n Z(G)|", "isaacs_identity_check",
                       _nonabelian, _isaacs_all))
    add(_catalog_claim("CG17", "G/Z Frobenius with abelian lifts K, H implies CG",
                       "G/Z(G) = K/Z x| H/Z Frobenius, K and H abelian => CG", "is_cg",
                       _shape_kh_abelian, is_cg))
    add(_catalog_claim("CG17cor", "G/Z Frobenius, H abelian, G' abelian implies CG",
                       "G/Z(G) Frobenius with H abelian and G' abelian => CG", "is_cg",
                       _shape_h_abelian_derived_abelian, is_cg))
    add(_catalog_claim("CG24", "G/Z minimal Frobenius and G' abelian implies CG",
                       "G/Z(G) minimal Frobenius and G' abelian => CG", "is_cg",
                       _shape_minimal_derived_abelian, is_cg))
    add(_catalog_claim("CG31", "G/Z Frobenius with cyclic kernel implies CG",
                       "G/Z(G) Frobenius with cyclic kernel => CG", "is_cg", _shape_cyclic_kernel, is_cg))
    add(_catalog_claim("CG18", "G/Z Frobenius with abelian lifts K, H implies G' n Z = 1",
                       "G/Z(G) Frobenius, K and H abelian => |G' n Z(G)| = 1",
                       "derived_meets_center_trivially", _shape_kh_abelian, derived_meets_center_trivially))
    add(_catalog_claim("CG181", "G/Z Frobenius with cyclic kernel implies G' n Z = 1",
                       "G/Z(G) Frobenius with cyclic kernel => |G' n Z(G)| = 1",
                       "derived_meets_center_trivially", _shape_cyclic_kernel, derived_meets_center_trivially))
    add(_catalog_claim("CGcor18", "G/Z Frobenius, H abelian, G' abelian implies G' n Z = 1",
                       "G/Z(G) Frobenius with H abelian, G' abelian => |G' n Z(G)| = 1",
                       "derived_meets_center_trivially", _shape_h_abelian_derived_abelian,
                       derived_meets_center_trivially))
    add(_catalog_claim("CG112", "|G'| prime and G' n Z = 1 implies CG",
                       "|G'| = p prime, G' n Z(G) = 1 => CG", "is_cg", _cg112_hyp, is_cg))
    add(_catalog_claim("CG11", "|G/Z| = pqr or p^2 q (p < q < r) implies CG",
                       "|G/Z(G)| = pqr or p^2 q, p < q < r => CG", "is_cg", _cg11_hyp, is_cg))
    add(_catalog_claim("CG14", "|G/Z| = pqr or p q^2 (p < q < r) implies G' n Z = 1",
                       "|G/Z(G)| = pqr or pq^2, p < q < r => |G' n Z(G)| = 1",
                       "derived_meets_center_trivially", _cg14_hyp, derived_meets_center_trivially))
    add(_catalog_claim("CG15", "|G/Z| = p^3: CG <=> abelian normal subgroup of prime index",
                       "|G/Z(G)| = p^3: CG <=> abelian normal subgroup of prime index",
                       "is_cg == abelian_normal_prime_index", _cg15_hyp, _cg15_holds))
    add(_catalog_claim("CG9", "solvable, non-abelian subgroups self-normalizing implies CG",
                       "G solvable non-abelian, N_G(H) = H for all non-abelian H => CG", "is_cg",
                       _cg9_hyp, is_cg))

    def cg12():
        groups = {"S4": fam.symmetric(4), "C2xS4": direct_product(fam.cyclic(2), fam.symmetric(4)),
                  "GL(2,3)": gf.gl2(_q(3))}
        out = {}
        for name, G in groups.items():
            if not _cg12_hyp(G):
                raise AssertionError(f"{name}: central quotient is not S4")
            out[name] = _cg12_holds(G)
        bad, detail = _over_catalog(_cg12_hyp, _cg12_holds)
        out["catalogViolations"] = bad
        return out, detail
    add(Claim("CG12", "G/Z = S4: CG <=> G' = A4", "G/Z(G) = S4 => (CG <=> G' = A4)",
              ("symmetric(n=4)", "C2 x symmetric(n=4)", "gl2(q=3)", "catalog(order <= 200)"),
              "is_cg == (G' ~ A4)", {"S4": True, "C2xS4": True, "GL(2,3)": True, "catalogViolations": []},
              cg12))
    add(_catalog_claim("CG19a", "minimal non-nilpotent with G' abelian implies CG",
                       "minimal non-nilpotent, G' abelian => CG", "is_cg",
                       lambda G: _min_nonnilpotent(G) and _derived_abelian(G), is_cg))
    add(_catalog_claim("CG19b", "minimal non-nilpotent implies G/Z is CG",
                       "minimal non-nilpotent => G/Z(G) CG", "is_cg(G/Z)", _min_nonnilpotent,
                       lambda G: is_cg(_quotient(G))))
    add(_catalog_claim("CG203", "G/Z minimal non-nilpotent and G' abelian implies CG",
                       "G/Z(G) minimal non-nilpotent, G' abelian => CG", "is_cg", _cg203_hyp, is_cg))
    add(_catalog_claim("CG23", "G/Z minimal non-abelian (not p-group) and G' abelian implies CG",
                       "G/Z(G) minimal non-abelian, not a p-group, G' abelian => CG", "is_cg",
                       _cg23_hyp, is_cg))
    add(Claim("CONJ-counterexample",
              "order-27 non-abelian groups match S3 in |Cent| and |G'| but are not isoclinic to it",
              "|Cent(G)| = |Cent(S3)| = 5, |G'| = |S3'| = 3, G !~ S3 (isoclinism)",
              ("heisenberg(p=3)", "modular_p(p=3,n=3)", "symmetric(n=3)"), "are_isoclinic",
              {k: {"cent": 5, "centS3": 5, "derived": 3, "derivedS3": 3, "isoclinic": False}
               for k in ("Heis(3)", "Mod_3(3)")},
              _conj_counterexample))

    ids = [c.id for c in C]
    if len(ids) != len(set(ids)):
        raise AssertionError("duplicate claim ids")
    return C


_REGISTRY: list[Claim] | None = None


def registry() -> list[Claim]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = sorted(_registry(), key=lambda c: c.id)
    return _REGISTRY


def list_claims(pattern: str | None = None) -> list[Claim]:
    """Claims whose id matches the glob ``pattern`` (all when None), sorted by id."""
    return [c for c in registry() if pattern is None or fnmatch.fnmatchcase(c.id, pattern)]


def run_claim(claim: Claim) -> ClaimResult:
    start = time.perf_counter()
    try:
        computed, detail = claim.check()
        computed = json.loads(json.dumps(computed))
        status = "Confirmed" if computed == claim.expected else "Refuted"
    except SkipClaim as exc:
        computed, detail, status = None, str(exc), "Skipped"
    except SearchBudgetExceeded as exc:
        computed, detail, status = None, f"search budget exhausted: {exc}", "Skipped"
    except Exception as exc:  # one claim's failure must not abort the run
        computed, detail, status = None, f"{type(exc).__name__}: {exc}", "Error"
    ms = int(round((time.perf_counter() - start) * 1000))
    return ClaimResult(claim.id, claim.description, claim.anchor, claim.builders, claim.predicate,
                       claim.expected, computed, status, detail, ms)


def _run_by_id(cid: str) -> ClaimResult:
    return run_claim(next(c for c in registry() if c.id == cid))


def run_claims(pattern: str | None = None, jobs: int = 1) -> ClaimReport:
    claims = list_claims(pattern)
    if jobs > 1 and len(claims) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_by_id, [c.id for c in claims]))
    else:
        results = [run_claim(c) for c in claims]
    return ClaimReport(tuple(sorted(results, key=lambda r: r.id)))


CSV_COLUMNS = ("id", "anchor", "expected", "computed", "status", "runtimeMs")


def _compact(v: Any) -> str:
    return json.dumps(v, sort_keys=True, separators=(",", ":"))


def render_report(report: ClaimReport, fmt: str = "text", timings: bool = False) -> str:
    """Render a report.  Output is byte-stable unless ``timings`` is set, in
    which case wall-clock runtimes are included."""
    if fmt == "json":
        doc = {"claims": [r.to_dict(timings) for r in report.results], "summary": report.counts()}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in report.results:
            w.writerow([r.id, r.anchor, _compact(r.expected), _compact(r.computed), r.status,
                        r.runtime_ms if timings else ""])
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = []
    width = max((len(r.id) for r in report.results), default=2)
    for r in report.results:
        line = f"{r.id:<{width}}  {r.status:<9}  expected={_compact(r.expected)}  computed={_compact(r.computed)}"
        if timings:
            line += f"  ({r.runtime_ms} ms)"
        lines.append(line)
        if r.status != "Confirmed" and r.detail:
            lines.append(f"{'':<{width}}  {'':<9}  {r.detail}")
    c = report.counts()
    lines.append(", ".join(f"{k}: {v}" for k, v in c.items()))
    return "\n".join(lines) + "\n"
