"""Exact maximum clique by branch and bound with greedy-colouring bounds.

Vertex sets are Python ints used as bitsets.
"""

from __future__ import annotations

import numpy as np

from .errors import SearchBudgetExceeded


def _colour_sort(P: int, nbr: list[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colours: list[int] = []
    uncoloured = P
    k = 0
    while uncoloured:
        k += 1
        avail = uncoloured
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~nbr[v] & ~low
            uncoloured &= ~low
            order.append(v)
            colours.append(k)
    return order, colours


def _greedy(nbr: list[int], n: int) -> list[int]:
    best: list[int] = []
    for start in range(n):
        clique = [start]
        cand = nbr[start]
        while cand:
            # take the candidate with most neighbours inside the candidate set
            v = max(_bits(cand), key=lambda u: ((nbr[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= nbr[v]
        if len(clique) > len(best):
            best = clique
    return best


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def max_clique(adj, budget: int = 10**7) -> list[int]:
    """Vertices of one maximum clique of the graph with boolean adjacency ``adj``.

    Raises SearchBudgetExceeded (with ``best`` set to the best clique found)
    when more than ``budget`` search nodes are expanded.
    """
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    if n == 0:
        return []
    deg = adj.sum(axis=1)
    perm = sorted(range(n), key=lambda v: (-int(deg[v]), v))
    pos = {v: i for i, v in enumerate(perm)}
    nbr = []
    for v in perm:
        m = 0
        for u in np.flatnonzero(adj[v]):
            if u != v:
                m |= 1 << pos[int(u)]
        nbr.append(m)
    best = _greedy(nbr, n)
    nodes = 0

    def expand(C: list[int], P: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("clique search budget exhausted",
                                       best=sorted(perm[v] for v in best))
        order, colours = _colour_sort(P, nbr)
        for i in range(len(order) - 1, -1, -1):
            if len(C) + colours[i] <= len(best):
                return
            v = order[i]
            C.append(v)
            sub = P & nbr[v]
            if sub:
                expand(C, sub)
            elif len(C) > len(best):
                best = C[:]
            C.pop()
            P &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(perm[v] for v in best)
