"""Isomorphism search between Cayley-table groups.

Backtracking assigns images to a greedy generating sequence of the source
group; every partial assignment is propagated over the subgroup it generates
and rejected as soon as it stops being a well-defined injective homomorphism.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .core import CayleyGroup, class_size_multiset, small_generating_set
from .errors import SearchBudgetExceeded

DEFAULT_SEARCH_BUDGET = 10**7


def extend_homomorphism(A: CayleyGroup, gens: Sequence[int], images: Sequence[int],
                        B: CayleyGroup) -> np.ndarray | None:
    """Propagate ``gens[i] -> images[i]`` over ``<gens>``.

    Returns an array with -1 outside ``<gens>``, or None when the assignment
    is not a well-defined injective homomorphism on ``<gens>``.
    """
    ta, tb = A.itable, B.itable
    f = np.full(A.order, -1, dtype=np.intp)
    f[0] = 0
    frontier = np.array([0], dtype=np.intp)
    pairs = list(zip(gens, images))
    while frontier.size:
        grown = []
        for g, h in pairs:
            tgt = ta[frontier, g]
            vals = tb[f[frontier], h]
            fresh = f[tgt] == -1
            f[tgt[fresh]] = vals[fresh]
            grown.append(tgt[fresh])
        frontier = np.unique(np.concatenate(grown)) if grown else frontier[:0]
    dom = np.flatnonzero(f >= 0)
    for g, h in pairs:
        if not np.array_equal(f[ta[dom, g]], tb[f[dom], h]):
            return None
    if len(np.unique(f[dom])) != len(dom):
        return None
    return f


def is_isomorphism(A: CayleyGroup, B: CayleyGroup, f) -> bool:
    f = np.asarray(f, dtype=np.intp)
    if A.order != B.order or f.shape != (A.order,):
        return False
    if len(np.unique(f)) != A.order or f.min() < 0 or f.max() >= B.order:
        return False
    return bool(np.array_equal(f[A.itable], B.itable[f[:, None], f[None, :]]))


def invariants(G: CayleyGroup) -> tuple:
    """Cheap isomorphism invariants used to prune searches."""
    from .analysis import center, commutator_subgroup

    return (G.order, G.order_histogram(), class_size_multiset(G),
            center(G).order, commutator_subgroup(G).order)


def _class_sizes(G: CayleyGroup) -> np.ndarray:
    return G.order // G.commute.sum(axis=1)


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise SearchBudgetExceeded(f"search budget of {self.limit} nodes exhausted")


def iter_isomorphisms(A: CayleyGroup, B: CayleyGroup, budget: int = DEFAULT_SEARCH_BUDGET,
                      prune: bool = True, _counter: _Budget | None = None) -> Iterator[np.ndarray]:
    """Yield every isomorphism ``A -> B`` (as index arrays) in a fixed order."""
    if A.order != B.order:
        return
    if prune and invariants(A) != invariants(B):
        return
    counter = _counter or _Budget(budget)
    if A.order == 1:
        yield np.zeros(1, dtype=np.intp)
        return
    gens = list(small_generating_set(A, A.full()))
    sa, sb = _class_sizes(A), _class_sizes(B)
    oa, ob = A.element_orders, B.element_orders
    cands = [np.flatnonzero((ob == oa[g]) & (sb == sa[g])) for g in gens]

    def rec(depth: int, imgs: list[int]) -> Iterator[np.ndarray]:
        for c in cands[depth]:
            counter.tick()
            trial = imgs + [int(c)]
            f = extend_homomorphism(A, gens[: depth + 1], trial, B)
            if f is None:
                continue
            if depth + 1 == len(gens):
                if is_isomorphism(A, B, f):
                    yield f
            else:
                yield from rec(depth + 1, trial)

    yield from rec(0, [])


def isomorphism_search(A: CayleyGroup, B: CayleyGroup,
                       budget: int = DEFAULT_SEARCH_BUDGET) -> np.ndarray | None:
    """First isomorphism ``A -> B`` or None.

    Raises SearchBudgetExceeded when the node budget runs out; that outcome
    is never reported as "not isomorphic".
    """
    for f in iter_isomorphisms(A, B, budget):
        return f
    return None


def are_isomorphic(A: CayleyGroup, B: CayleyGroup, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    return isomorphism_search(A, B, budget) is not None
