"""Brute-force reference computations that share no code with centset.

Groups here are plain Python: a list of hashable elements plus a ``mul``
function.  Everything is quadratic or worse and only meant for small orders.
"""

from __future__ import annotations

import itertools
from typing import Callable, Hashable, Sequence

Elem = Hashable
Mul = Callable[[Elem, Elem], Elem]


def closure(gens: Sequence[Elem], identity: Elem, mul: Mul) -> list[Elem]:
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return list(seen)


def perm_mul(a: tuple, b: tuple) -> tuple:
    # apply a first, then b
    return tuple(b[a[i]] for i in range(len(a)))


def perm_group(degree: int, gens: Sequence[Sequence[int]]) -> tuple[list[tuple], Mul]:
    e = tuple(range(degree))
    return closure([tuple(g) for g in gens], e, perm_mul), perm_mul


def symmetric_group(n: int):
    return [tuple(p) for p in itertools.permutations(range(n))], perm_mul


def centralizer_sets(elems: list[Elem], mul: Mul) -> set[frozenset]:
    return {frozenset(y for y in elems if mul(x, y) == mul(y, x)) for x in elems}


def cent_count(elems: list[Elem], mul: Mul) -> int:
    return len(centralizer_sets(elems, mul))


def _inverse(x: Elem, elems: list[Elem], identity: Elem, mul: Mul) -> Elem:
    return next(y for y in elems if mul(x, y) == identity)


def identity_of(elems: list[Elem], mul: Mul) -> Elem:
    return next(e for e in elems if all(mul(e, x) == x for x in elems))


def derived_order(elems: list[Elem], mul: Mul) -> int:
    e = identity_of(elems, mul)
    inv = {x: _inverse(x, elems, e, mul) for x in elems}
    comms = {mul(mul(inv[a], inv[b]), mul(a, b)) for a in elems for b in elems}
    return len(closure(list(comms), e, mul))


def center_order(elems: list[Elem], mul: Mul) -> int:
    return sum(all(mul(x, y) == mul(y, x) for y in elems) for x in elems)


def omega(elems: list[Elem], mul: Mul) -> int:
    """Largest pairwise non-commuting subset, by exhaustive growth."""
    nc = [x for x in elems if any(mul(x, y) != mul(y, x) for y in elems)]
    if not nc:
        return 1
    adj = {x: {y for y in nc if mul(x, y) != mul(y, x)} for x in nc}
    best = 0

    def grow(size: int, cand: set) -> None:
        nonlocal best
        best = max(best, size)
        if size + len(cand) <= best:
            return
        for x in list(cand):
            cand = cand - {x}
            grow(size + 1, cand & adj[x])

    grow(0, set(nc))
    return best


# -- 2x2 matrices over a small field ------------------------------------------

class SmallField:
    """GF(p) or GF(4) by explicit tables; GF(4) = {0, 1, w, w+1} with w^2 = w+1."""

    def __init__(self, q: int):
        self.q = q
        if q == 4:
            self.add = lambda a, b: a ^ b
            # elements as bit pairs (c1 c0) meaning c1*w + c0
            def mul(a, b):
                c0 = (a & 1) * (b & 1)
                c1 = (a >> 1) * (b & 1) ^ (a & 1) * (b >> 1)
                c2 = (a >> 1) * (b >> 1)
                # w^2 = w + 1
                return ((c1 ^ c2) << 1) | (c0 ^ c2)
            self.mul = mul
        else:
            self.add = lambda a, b: (a + b) % q
            self.mul = lambda a, b: (a * b) % q

    def elems(self) -> range:
        return range(self.q)

    def sub(self, a: int, b: int) -> int:
        return next(c for c in self.elems() if self.add(b, c) == a)


def matrix_group(q: int, kind: str):
    """GL, SL or PGL(2, q) as explicit elements.  PGL elements are frozensets
    of scalar multiples."""
    F = SmallField(q)

    def mm(x, y):
        a, b, c, d = x
        e, f, g, h = y
        m, A = F.mul, F.add
        return (A(m(a, e), m(b, g)), A(m(a, f), m(b, h)), A(m(c, e), m(d, g)), A(m(c, f), m(d, h)))

    def det(x):
        a, b, c, d = x
        return F.sub(F.mul(a, d), F.mul(b, c))

    mats = [x for x in itertools.product(F.elems(), repeat=4) if det(x) != 0]
    if kind == "GL":
        return mats, mm
    if kind == "SL":
        return [x for x in mats if det(x) == 1], mm
    scalars = [s for s in F.elems() if s]

    def cls(x):
        return frozenset(tuple(F.mul(s, v) for v in x) for s in scalars)

    elems = list({cls(x) for x in mats})

    def pm(X, Y):
        return cls(mm(min(X), min(Y)))

    return elems, pm
