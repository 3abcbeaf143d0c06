"""A deterministic sample of small groups for quantified property checks.

Members are family instances plus direct and semidirect products of order at
most 200.  Duplicates are removed by isomorphism test (invariants first, then
an explicit search), so every member is a distinct isomorphism class.  It is a
sample, not a census of all groups up to 200.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import families as fam
from . import gf
from .analysis import cent_count, center, commutator_subgroup
from .core import (
    ActionSpec,
    CayleyGroup,
    PermGenSpec,
    build_from_permutations,
    class_size_multiset,
    direct_product,
    quotient_group,
    semidirect_product,
    SubgroupSet,
)
from .iso import are_isomorphic

CATALOG_MAX_ORDER = 200


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], CayleyGroup]


# -- automorphism helpers -------------------------------------------------

def cyclic_power_aut(n: int, r: int) -> tuple[int, ...]:
    """``x -> x^r`` on ``cyclic(n)``."""
    return tuple((r * i) % n for i in range(n))


def _vectors(p: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(p), repeat=k))


def linear_aut(p: int, matrix) -> tuple[int, ...]:
    """``v -> M v`` on ``elementary_abelian(p, k)`` (index = base-p digits)."""
    M = np.asarray(matrix, dtype=np.int64) % p
    k = M.shape[0]
    vecs = np.array(_vectors(p, k), dtype=np.int64)
    img = (vecs @ M.T) % p
    weights = p ** np.arange(k - 1, -1, -1)
    return tuple(int(x) for x in img @ weights)


def _mat_order(M: np.ndarray, p: int, limit: int = 1000) -> int:
    k = M.shape[0]
    I = np.eye(k, dtype=np.int64)
    P = M.copy()
    for e in range(1, limit):
        if np.array_equal(P, I):
            return e
        P = (P @ M) % p
    return 0


def _fixed_point_free(M: np.ndarray, p: int, order: int) -> bool:
    k = M.shape[0]
    vecs = np.array(_vectors(p, k)[1:], dtype=np.int64)
    P = M.copy()
    for _ in range(1, order):
        if ((vecs @ P.T) % p == vecs).all(axis=1).any():
            return False
        P = (P @ M) % p
    return True


def companion_of_order(p: int, k: int, order: int) -> np.ndarray:
    """First companion matrix (lexicographic in coefficients) of exact order
    ``order`` whose nontrivial powers fix only 0."""
    for coeffs in itertools.product(range(p), repeat=k):
        M = np.zeros((k, k), dtype=np.int64)
        M[1:, :-1] = np.eye(k - 1, dtype=np.int64)
        M[:, -1] = [(-c) % p for c in coeffs]
        if _mat_order(M, p) == order and _fixed_point_free(M, p, order):
            return M
    raise ValueError(f"no fixed-point-free companion matrix of order {order} over GF({p})^{k}")


def elementary_by_cyclic(p: int, k: int, m: int, matrix=None) -> CayleyGroup:
    """``C_p^k x| C_m`` with the generator of ``C_m`` acting linearly."""
    M = companion_of_order(p, k, m) if matrix is None else np.asarray(matrix)
    N = fam.elementary_abelian(p, k)
    H = fam.cyclic(m)
    return semidirect_product(N, H, ActionSpec((1,), (linear_aut(p, M),)))


def cyclic_by_cyclic(n: int, m: int, r: int) -> CayleyGroup:
    return semidirect_product(fam.cyclic(n), fam.cyclic(m), ActionSpec((1,), (cyclic_power_aut(n, r),)))


def c3sq_by_q8() -> CayleyGroup:
    """Frobenius group C3^2 x| Q8 (Q8 acting through SL(2,3))."""
    Q = fam.generalized_quaternion(2)  # a = index 2, b = index 1
    i_mat = [[0, 2], [1, 0]]
    j_mat = [[1, 1], [1, 2]]
    N = fam.elementary_abelian(3, 2)
    return semidirect_product(N, Q, ActionSpec((2, 1), (linear_aut(3, i_mat), linear_aut(3, j_mat))))


def c3_wreath_c3() -> CayleyGroup:
    return build_from_permutations(PermGenSpec(9, ((1, 2, 0, 3, 4, 5, 6, 7, 8),
                                                   (3, 4, 5, 6, 7, 8, 0, 1, 2))))


def central_product_c4_d8() -> CayleyGroup:
    """C4 o D8 (Pauli group): C4 x D8 modulo the diagonal central involution."""
    G = direct_product(fam.cyclic(4), fam.dihedral(4))
    z = 2 * 8 + 4  # (x^2, a^2): a^2 has index 2*2 in D8's normal form
    return quotient_group(G, SubgroupSet.from_members(G.order, [0, z]))[0]


def _d(*parts):
    def build():
        G = parts[0]()
        for p in parts[1:]:
            G = direct_product(G, p(), cap=10**6)
        return G
    return build


def _entries() -> list[CatalogEntry]:
    E: list[CatalogEntry] = []

    def add(name, build):
        E.append(CatalogEntry(name, build))

    S3, S4, A4, A5 = (lambda: fam.symmetric(3)), (lambda: fam.symmetric(4)), (lambda: fam.alternating(4)), (lambda: fam.alternating(5))
    D8, Q8 = (lambda: fam.dihedral(4)), (lambda: fam.generalized_quaternion(2))
    C = lambda n: (lambda: fam.cyclic(n))  # noqa: E731
    SL23 = lambda: gf.sl2(gf.build_field(3))  # noqa: E731
    F21 = lambda: fam.frobenius_metacyclic(7, 3)  # noqa: E731
    Heis3 = lambda: fam.heisenberg(3)  # noqa: E731

    add("S3", S3)
    add("S4", S4)
    add("S5", lambda: fam.symmetric(5))
    add("A4", A4)
    add("A5", A5)
    add("Heis(3)", Heis3)
    add("Heis(5)", lambda: fam.heisenberg(5))
    for n in (1, 2, 3, 4, 6, 8):
        add(f"C{n}", C(n))
    for p, k in ((2, 2), (2, 3), (3, 2)):
        add(f"C{p}^{k}", lambda p=p, k=k: fam.elementary_abelian(p, k))
    for n in list(range(3, 31)) + [33, 35, 36, 40, 45, 49, 50, 60, 75, 90, 100]:
        add(f"D{2 * n}", lambda n=n: fam.dihedral(n))
    for m, n in ((3, 4), (4, 4), (5, 4), (6, 4), (3, 6), (5, 6), (7, 4), (3, 8), (9, 4), (5, 8), (7, 6), (10, 4)):
        add(f"D({m},{n})", lambda m=m, n=n: fam.generalized_dihedral(m, n))
    for m in list(range(2, 17)) + [20, 25, 30, 40, 50]:
        add(f"Q{4 * m}", lambda m=m: fam.generalized_quaternion(m))
    for n in (3, 4, 5, 6, 7):
        add(f"SD{2 ** n}", lambda n=n: fam.semidihedral(n))
    for p, n in ((2, 4), (2, 5), (2, 6), (2, 7), (3, 3), (3, 4), (5, 3)):
        add(f"Mod_{n}({p})", lambda p=p, n=n: fam.modular_p(p, n))
    for n in list(range(1, 13)) + [15, 20, 25, 30, 33]:
        add(f"U{6 * n}", lambda n=n: fam.u6n(n))
    for p, q in ((5, 2), (7, 3), (11, 5), (13, 3), (19, 3), (31, 3), (31, 5), (37, 3), (43, 3), (61, 3)):
        add(f"C{p}:C{q}", lambda p=p, q=q: fam.frobenius_metacyclic(p, q))
    add("SL(2,3)", SL23)
    add("GL(2,3)", lambda: gf.gl2(gf.build_field(3)))
    add("SL(2,5)", lambda: gf.sl2(gf.build_field(5)))
    add("PSL(2,7)", lambda: gf.psl2(gf.build_field(7)))
    # metacyclic and cyclic-by-cyclic
    for n, m, r in ((5, 4, 2), (7, 6, 3), (11, 10, 2), (13, 4, 5), (13, 6, 4), (13, 12, 2), (9, 6, 2),
                    (7, 9, 2), (13, 9, 3), (19, 9, 7), (9, 9, 4), (5, 8, 2), (4, 4, 3), (8, 4, 5),
                    (8, 2, 3), (7, 12, 3), (11, 4, 10), (5, 12, 2)):
        add(f"C{n}:C{m}[{r}]", lambda n=n, m=m, r=r: cyclic_by_cyclic(n, m, r))
    # elementary abelian kernels
    add("C3^2:C2", lambda: elementary_by_cyclic(3, 2, 2, [[2, 0], [0, 2]]))
    add("C3^2:C4", lambda: elementary_by_cyclic(3, 2, 4))
    add("C3^2:C8", lambda: elementary_by_cyclic(3, 2, 8))
    add("C3^2:Q8", c3sq_by_q8)
    add("C2^2:C4", lambda: elementary_by_cyclic(2, 2, 4, [[0, 1], [1, 0]]))
    add("C2^2:C9", lambda: elementary_by_cyclic(2, 2, 9, [[0, 1], [1, 1]]))
    add("C2^3:C7", lambda: elementary_by_cyclic(2, 3, 7))
    add("C2^4:C5", lambda: elementary_by_cyclic(2, 4, 5))
    add("C5^2:C2", lambda: elementary_by_cyclic(5, 2, 2, [[4, 0], [0, 4]]))
    add("C5^2:C3", lambda: elementary_by_cyclic(5, 2, 3))
    add("C5^2:C4", lambda: elementary_by_cyclic(5, 2, 4))
    add("C7^2:C3", lambda: elementary_by_cyclic(7, 2, 3))
    add("C3^3:C2", lambda: elementary_by_cyclic(3, 3, 2, [[2, 0, 0], [0, 2, 0], [0, 0, 2]]))
    add("C3wrC3", c3_wreath_c3)
    add("C4oD8", central_product_c4_d8)
    # direct products
    prods = [
        ("C2xD8", C(2), D8), ("C2xQ8", C(2), Q8), ("C3xS3", C(3), S3), ("C4xS3", C(4), S3),
        ("C2xA4", C(2), A4), ("C2xS4", C(2), S4), ("C2xA5", C(2), A5), ("C3xA4", C(3), A4),
        ("S3xS3", S3, S3), ("C3xD8", C(3), D8), ("C3xQ8", C(3), Q8), ("C5xS3", C(5), S3),
        ("C2^2xS3", lambda: fam.elementary_abelian(2, 2), S3), ("C4xA4", C(4), A4),
        ("C5xA4", C(5), A4), ("S3xD10", S3, lambda: fam.dihedral(5)), ("C2xSL(2,3)", C(2), SL23),
        ("C2xHeis(3)", C(2), Heis3), ("C3xHeis(3)", C(3), Heis3),
        ("C3xMod_3(3)", C(3), lambda: fam.modular_p(3, 3)), ("C2xF21", C(2), F21), ("C3xF21", C(3), F21),
        ("C5xF21", C(5), F21), ("C2^2xD8", lambda: fam.elementary_abelian(2, 2), D8),
        ("C2^2xQ8", lambda: fam.elementary_abelian(2, 2), Q8), ("C4xD8", C(4), D8),
        ("C2xSD16", C(2), lambda: fam.semidihedral(4)), ("C2xF20", C(2), lambda: cyclic_by_cyclic(5, 4, 2)),
        ("C3xF20", C(3), lambda: cyclic_by_cyclic(5, 4, 2)), ("S3xC7", S3, C(7)),
        ("C3xD14", C(3), lambda: fam.dihedral(7)), ("D8xS3", D8, S3), ("Q8xS3", Q8, S3),
        ("A4xS3", A4, S3), ("C3xS4", C(3), S4), ("C4xS4", C(4), S4),
        ("C2^2xS4", lambda: fam.elementary_abelian(2, 2), S4), ("C2xGL(2,3)", C(2), lambda: gf.gl2(gf.build_field(3))),
        ("C3xSL(2,3)", C(3), SL23), ("C3xA5", C(3), A5), ("C2xS3xS3", C(2), S3, S3),
        ("C3xD10", C(3), lambda: fam.dihedral(5)), ("C5xD8", C(5), D8), ("C2xC3^2:C4", C(2), lambda: elementary_by_cyclic(3, 2, 4)),
        ("C2xD(3,4)", C(2), lambda: fam.generalized_dihedral(3, 4)), ("C3xQ12", C(3), lambda: fam.generalized_quaternion(3)),
        ("C2xC2^3:C7", C(2), lambda: elementary_by_cyclic(2, 3, 7)), ("C2xS5", C(2), lambda: fam.symmetric(5)),
    ]
    for name, *parts in prods:
        add(name, _d(*parts))
    return E


def catalog_invariants(G: CayleyGroup) -> tuple:
    return (G.order, G.order_histogram(), class_size_multiset(G), center(G).order,
            commutator_subgroup(G).order, cent_count(G))


_CACHE: dict[int, list[tuple[str, CayleyGroup]]] = {}


def build_catalog(max_order: int = CATALOG_MAX_ORDER) -> list[tuple[str, CayleyGroup]]:
    """(name, group) pairs in a fixed order, one per isomorphism class."""
    if max_order in _CACHE:
        return _CACHE[max_order]
    seen: dict[tuple, list[CayleyGroup]] = {}
    out = []
    for entry in _entries():
        G = entry.build()
        if G.order > max_order:
            continue
        bucket = seen.setdefault(catalog_invariants(G), [])
        if any(are_isomorphic(G, H) for H in bucket):
            continue
        bucket.append(G)
        G.provenance = entry.name
        out.append((entry.name, G))
    _CACHE[max_order] = out
    return out
