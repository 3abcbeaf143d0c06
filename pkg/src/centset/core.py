"""Dense Cayley-table groups and the subgroup machinery built on them.

A group of order ``n`` is an ``n x n`` table of element indices with the
identity at index 0.  Everything downstream (centralizers, quotients,
isomorphism search) works on these tables with vectorised numpy indexing.
"""

from __future__ import annotations

import functools
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import (
    InvalidAction,
    InvalidGroupTable,
    InvalidPermutation,
    NotNormal,
    OrderCapExceeded,
)

DEFAULT_ORDER_CAP = 2048
EXHAUSTIVE_ASSOC_LIMIT = 256
SAMPLED_ASSOC_TRIPLES = 100_000


def default_cap() -> int:
    """Order cap, overridable through ``CENTSET_ORDER_CAP``."""
    raw = os.environ.get("CENTSET_ORDER_CAP")
    if raw:
        cap = int(raw)
        if cap < 1:
            raise ValueError("CENTSET_ORDER_CAP must be positive")
        return cap
    return DEFAULT_ORDER_CAP


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def memoized(fn):
    """Cache ``fn(G, *args)`` on the group instance (args must be hashable)."""

    @functools.wraps(fn)
    def wrapper(G, *args):
        key = (fn.__name__,) + args
        try:
            return G._memo[key]
        except KeyError:
            val = G._memo[key] = fn(G, *args)
            return val

    return wrapper


class CayleyGroup:
    """A finite group stored as its full multiplication table.

    ``table[a, b]`` is the index of ``a*b``.  Instances are treated as
    immutable; derived data is cached on first use.
    """

    def __init__(self, table, labels: Sequence[str] | None = None,
                 provenance: str | None = None, validate: bool = True):
        t = np.asarray(table)
        if t.ndim == 1:
            n = int(round(len(t) ** 0.5))
            if n * n != len(t):
                raise InvalidGroupTable("flat table length is not a square")
            t = t.reshape(n, n)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise InvalidGroupTable("table must be a non-empty square array")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise InvalidGroupTable("table entries out of range")
        self.table = _readonly(t.astype(np.uint16 if n <= 65535 else np.int64))
        self.order = n
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise InvalidGroupTable("label count does not match order")
        self.provenance = provenance
        self._memo: dict = {}
        if validate:
            self.validate()
        inv = np.argmin(self.table, axis=1)
        self.inverses = _readonly(inv.astype(np.int64))

    def __repr__(self) -> str:
        tag = f" {self.provenance}" if self.provenance else ""
        return f"<CayleyGroup order={self.order}{tag}>"

    def __len__(self) -> int:
        return self.order

    # -- validation ---------------------------------------------------
    def validate(self, exhaustive_limit: int = EXHAUSTIVE_ASSOC_LIMIT) -> None:
        """Check the Latin square property, identity placement and associativity."""
        t = self.table.astype(np.int64)
        n = self.order
        ar = np.arange(n)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise InvalidGroupTable("element 0 is not a two-sided identity")
        srt = np.sort(t, axis=1)
        if not (srt == ar).all():
            raise InvalidGroupTable("a row is not a permutation")
        srt = np.sort(t, axis=0)
        if not (srt == ar[:, None]).all():
            raise InvalidGroupTable("a column is not a permutation")
        if n <= exhaustive_limit:
            for a in range(n):
                if not np.array_equal(t[t[a]], t[a][t]):
                    raise InvalidGroupTable(f"associativity fails for a={a}")
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, SAMPLED_ASSOC_TRIPLES))
            if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
                raise InvalidGroupTable("associativity fails on a sampled triple")

    # -- basic arithmetic ---------------------------------------------
    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        r = 0
        for _ in range(k % self.order_of(a)):
            r = int(self.table[r, a])
        return r

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return int(self.table[self.table[g, x], self.inverses[g]])

    def commutator(self, a: int, b: int) -> int:
        """``[a, b] = a^-1 b^-1 a b``."""
        t = self.table
        return int(t[t[self.inverses[a], self.inverses[b]], t[a, b]])

    @cached_property
    def itable(self) -> np.ndarray:
        """Table as native ints, for fancy indexing without conversions."""
        return _readonly(self.table.astype(np.intp))

    @cached_property
    def element_orders(self) -> np.ndarray:
        t = self.itable
        n = self.order
        ar = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        cur = ar.copy()
        k = 1
        while True:
            done = (cur == 0) & (orders == 0)
            orders[done] = k
            if (orders > 0).all():
                break
            cur = t[cur, ar]
            k += 1
        return _readonly(orders)

    def order_of(self, x: int) -> int:
        return int(self.element_orders[x])

    @cached_property
    def commute(self) -> np.ndarray:
        """Boolean matrix: ``commute[x, y]`` iff ``xy = yx``."""
        t = self.table
        return _readonly(t == t.T)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(self.commute.all())

    @cached_property
    def conjugation(self) -> np.ndarray:
        """``conjugation[g, x] = g x g^-1``."""
        t = self.itable
        return _readonly(t[t, self.inverses[:, None]])

    @cached_property
    def commutators(self) -> np.ndarray:
        """``commutators[a, b] = [a, b]``."""
        t = self.itable
        inv = self.inverses
        return _readonly(t[t[inv][:, inv], t])

    def order_histogram(self) -> tuple[tuple[int, int], ...]:
        vals, counts = np.unique(self.element_orders, return_counts=True)
        return tuple(zip(vals.tolist(), counts.tolist()))

    def full(self) -> SubgroupSet:
        return SubgroupSet.from_members(self.order, np.arange(self.order))

    def trivial(self) -> SubgroupSet:
        return SubgroupSet.from_members(self.order, [0])


@dataclass(frozen=True, eq=False)
class SubgroupSet:
    """Membership mask of a subgroup of a parent group of order ``parent_order``."""

    parent_order: int
    mask: np.ndarray
    order: int
    gens: tuple[int, ...] = field(default=())

    @classmethod
    def from_mask(cls, mask: np.ndarray, gens: Iterable[int] = ()) -> SubgroupSet:
        m = np.asarray(mask, dtype=bool).copy()
        m.setflags(write=False)
        return cls(len(m), m, int(m.sum()), tuple(int(g) for g in gens))

    @classmethod
    def from_members(cls, parent_order: int, members, gens: Iterable[int] = ()) -> SubgroupSet:
        m = np.zeros(parent_order, dtype=bool)
        m[np.asarray(list(members) if not isinstance(members, np.ndarray) else members, dtype=np.intp)] = True
        return cls.from_mask(m, gens)

    @cached_property
    def key(self) -> bytes:
        return np.packbits(self.mask).tobytes()

    @cached_property
    def members(self) -> np.ndarray:
        return _readonly(np.flatnonzero(self.mask))

    def sort_key(self) -> tuple[int, bytes]:
        return (self.order, self.key)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __eq__(self, other) -> bool:
        return isinstance(other, SubgroupSet) and self.key == other.key and self.parent_order == other.parent_order

    def __hash__(self) -> int:
        return hash((self.parent_order, self.key))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<SubgroupSet order={self.order} of {self.parent_order}>"

    def issubset(self, other: SubgroupSet) -> bool:
        return not (self.mask & ~other.mask).any()

    def intersection(self, other: SubgroupSet) -> SubgroupSet:
        return SubgroupSet.from_mask(self.mask & other.mask)

    def is_full(self) -> bool:
        return self.order == self.parent_order

    def generators(self, G: CayleyGroup) -> tuple[int, ...]:
        return self.gens if self.gens or self.order == 1 else small_generating_set(G, self)


# -- construction from generators -------------------------------------

def _table_from_right_generators(n: int, gen_index: Sequence[int],
                                 gen_columns: Sequence[np.ndarray]) -> np.ndarray:
    """Fill a full table from the right-multiplication columns of generators.

    ``gen_columns[i][a]`` is the index of ``a * g_i``.  Each column
    ``b = p * g`` of the table is ``gen_column(g)[column(p)]``.
    """
    table = np.empty((n, n), dtype=np.int64)
    table[:, 0] = np.arange(n)
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for col in gen_columns:
            b = int(col[p])
            if not seen[b]:
                seen[b] = True
                table[:, b] = col[table[:, p]]
                queue.append(b)
    if not seen.all():
        raise InvalidGroupTable("generators do not reach every element")
    return table


def closure_group(identity: Hashable, generators: Sequence[Hashable],
                  mul: Callable[[Hashable, Hashable], Hashable], cap: int,
                  elements: Sequence[Hashable] | None = None,
                  label: Callable[[Hashable], str] = str,
                  provenance: str | None = None) -> tuple[CayleyGroup, list]:
    """Build a CayleyGroup from hashable elements closed under ``mul``.

    Elements are indexed in BFS discovery order from ``identity`` unless an
    explicit ``elements`` ordering (identity first) is supplied.
    """
    if elements is None:
        elems = [identity]
        index = {identity: 0}
        queue = deque([identity])
        while queue:
            e = queue.popleft()
            for g in generators:
                h = mul(e, g)
                if h not in index:
                    if len(elems) >= cap:
                        raise OrderCapExceeded(f"closure exceeds order cap {cap}")
                    index[h] = len(elems)
                    elems.append(h)
                    queue.append(h)
    else:
        elems = list(elements)
        if len(elems) > cap:
            raise OrderCapExceeded(f"order {len(elems)} exceeds cap {cap}")
        if elems[0] != identity:
            raise InvalidGroupTable("element list must start with the identity")
        index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    gens = [g for g in generators if g != identity] or [identity]
    gen_cols = [np.array([index[mul(e, g)] for e in elems], dtype=np.int64) for g in gens]
    gen_idx = [index[g] for g in gens]
    table = _table_from_right_generators(n, gen_idx, gen_cols)
    G = CayleyGroup(table, [label(e) for e in elems], provenance=provenance, validate=False)
    _check_latin(G)
    return G, elems


def _check_latin(G: CayleyGroup) -> None:
    t = G.table
    ar = np.arange(G.order)
    if not (np.sort(t, axis=1) == ar).all() or not (np.sort(t, axis=0) == ar[:, None]).all():
        raise InvalidGroupTable("constructed table is not a Latin square")


@dataclass(frozen=True)
class PermGenSpec:
    degree: int
    generators: tuple[tuple[int, ...], ...]


def format_cycles(perm: Sequence[int]) -> str:
    seen = set()
    parts = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse ``"(0 1 2)(3 4)"`` into an image tuple on ``degree`` points."""
    perm = list(range(degree))
    text = text.strip()
    if text in ("", "()"):
        return tuple(perm)
    for chunk in text.replace(")", ")|").split("|"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise InvalidPermutation(f"bad cycle syntax: {chunk!r}")
        pts = [int(x) for x in chunk[1:-1].replace(",", " ").split()]
        if len(set(pts)) != len(pts) or any(p < 0 or p >= degree for p in pts):
            raise InvalidPermutation(f"bad cycle {chunk!r} on {degree} points")
        cyc = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            cyc[a] = b
        # cycles compose left to right
        perm = [cyc[p] for p in perm]
    return tuple(perm)


def build_from_permutations(spec: PermGenSpec, cap: int | None = None) -> CayleyGroup:
    """Close permutation generators into a CayleyGroup (BFS discovery order).

    Products act left to right: ``(a*b)[i] = b[a[i]]``.
    """
    cap = default_cap() if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be >= 1")
    m = spec.degree
    gens = []
    for g in spec.generators:
        g = tuple(int(x) for x in g)
        if len(g) != m or sorted(g) != list(range(m)):
            raise InvalidPermutation(f"{g} is not a permutation of {m} points")
        gens.append(g)
    if not gens:
        raise InvalidPermutation("generator list must be non-empty")
    identity = tuple(range(m))

    def mul(a, b):
        return tuple(b[i] for i in a)

    G, _ = closure_group(identity, gens, mul, cap, label=format_cycles,
                         provenance=f"perm degree {m}")
    return G


def element_order(G: CayleyGroup, x: int) -> int:
    return G.order_of(x)


def generated_subgroup(G: CayleyGroup, seeds: Iterable[int],
                       start: SubgroupSet | None = None) -> SubgroupSet:
    """Least subgroup containing ``seeds`` (and ``start``, if given)."""
    t = G.itable
    seeds = [int(s) for s in seeds]
    gens = list(dict.fromkeys(s for s in seeds if s != 0))
    if start is not None:
        mask = start.mask.copy()
        base = list(start.generators(G))
        gens = list(dict.fromkeys(base + gens))
        frontier = np.flatnonzero(mask)
    else:
        mask = np.zeros(G.order, dtype=bool)
        mask[0] = True
        frontier = np.array([0])
    if not gens:
        return SubgroupSet.from_mask(mask)
    g = np.array(gens, dtype=np.intp)
    hit = np.zeros(G.order, dtype=bool)
    while frontier.size:
        hit[:] = False
        hit[t[np.ix_(frontier, g)].ravel()] = True
        hit &= ~mask
        mask |= hit
        frontier = np.flatnonzero(hit)
    return SubgroupSet.from_mask(mask, gens)


def small_generating_set(G: CayleyGroup, S: SubgroupSet) -> tuple[int, ...]:
    """Greedy generating set: repeatedly add the highest-order missing element."""
    members = S.members
    order = G.element_orders[members]
    ranked = members[np.lexsort((members, -order))]
    cur = G.trivial()
    gens: list[int] = []
    for x in ranked:
        if cur.order == S.order:
            break
        if not cur.mask[x]:
            gens.append(int(x))
            cur = generated_subgroup(G, gens)
    return tuple(gens)


def conjugacy_classes(G: CayleyGroup) -> list[list[int]]:
    """Conjugacy classes sorted by (size, least element)."""
    conj = G.conjugation
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        cls = np.unique(conj[:, x])
        seen[cls] = True
        classes.append(cls.tolist())
    classes.sort(key=lambda c: (len(c), c[0]))
    return classes


def class_size_multiset(G: CayleyGroup) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in conjugacy_classes(G)))


def is_normal(G: CayleyGroup, N: SubgroupSet) -> bool:
    conj = G.conjugation[:, N.members]
    return bool(N.mask[conj].all())


def quotient_group(G: CayleyGroup, N: SubgroupSet) -> tuple[CayleyGroup, np.ndarray]:
    """``G/N`` with cosets indexed by ascending least representative.

    Returns the quotient and the projection array ``g -> coset index``.
    """
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    t = G.itable
    reps_of = t[:, N.members].min(axis=1)
    reps, proj = np.unique(reps_of, return_inverse=True)
    qt = proj[t[np.ix_(reps, reps)]]
    labels = [G.labels[r] if N.order == 1 else f"{G.labels[r]}N" for r in reps]
    Q = CayleyGroup(qt, labels, provenance=f"quotient of order {len(reps)}", validate=False)
    return Q, _readonly(proj.astype(np.int64))


def subgroup_as_group(G: CayleyGroup, S: SubgroupSet) -> tuple[CayleyGroup, np.ndarray]:
    """Standalone copy of ``S`` plus the embedding ``new index -> parent index``."""
    members = S.members
    remap = np.full(G.order, -1, dtype=np.int64)
    remap[members] = np.arange(len(members))
    sub = remap[G.itable[np.ix_(members, members)]]
    if (sub < 0).any():
        raise InvalidGroupTable("subset is not closed under multiplication")
    H = CayleyGroup(sub, [G.labels[m] for m in members],
                    provenance=f"subgroup of order {len(members)}", validate=False)
    return H, members


def direct_product(A: CayleyGroup, B: CayleyGroup, cap: int | None = None) -> CayleyGroup:
    """Componentwise product; pair ``(a, b)`` has index ``a*|B| + b``."""
    cap = default_cap() if cap is None else cap
    na, nb = A.order, B.order
    if na * nb > cap:
        raise OrderCapExceeded(f"order {na * nb} exceeds cap {cap}")
    ta, tb = A.itable, B.itable
    table = (ta[:, None, :, None] * nb + tb[None, :, None, :]).reshape(na * nb, na * nb)
    labels = [f"({la},{lb})" for la in A.labels for lb in B.labels]
    return CayleyGroup(table, labels, provenance=f"direct product {na}x{nb}", validate=False)


@dataclass(frozen=True)
class ActionSpec:
    """Action of ``H`` on ``N``: ``images[i]`` is the automorphism of N (as a
    permutation of N's element indices) assigned to ``generators[i]`` of H."""

    generators: tuple[int, ...]
    images: tuple[tuple[int, ...], ...]


def action_homomorphism(N: CayleyGroup, H: CayleyGroup, action: ActionSpec) -> np.ndarray:
    """Extend generator images to ``theta[h] = automorphism of N``; verify it."""
    nn, nh = N.order, H.order
    tn = N.itable
    if len(action.generators) != len(action.images):
        raise InvalidAction("generator and image counts differ")
    imgs = []
    for g, img in zip(action.generators, action.images):
        p = np.asarray(img, dtype=np.int64)
        if p.shape != (nn,) or sorted(p.tolist()) != list(range(nn)):
            raise InvalidAction(f"image of generator {g} is not a permutation of N")
        if p[0] != 0 or not np.array_equal(p[tn], tn[p][:, p]):
            raise InvalidAction(f"image of generator {g} is not an automorphism of N")
        imgs.append(p)
    theta = np.full((nh, nn), -1, dtype=np.int64)
    theta[0] = np.arange(nn)
    th = H.itable
    queue = deque([0])
    while queue:
        h = queue.popleft()
        for g, p in zip(action.generators, imgs):
            hg = int(th[h, g])
            val = theta[h][p]
            if theta[hg, 0] == -1:
                theta[hg] = val
                queue.append(hg)
            elif not np.array_equal(theta[hg], val):
                raise InvalidAction("generator images do not define a homomorphism")
    if (theta[:, 0] == -1).any():
        raise InvalidAction("action generators do not generate H")
    return theta


def semidirect_product(N: CayleyGroup, H: CayleyGroup, action: ActionSpec,
                       cap: int | None = None) -> CayleyGroup:
    """``N x| H`` with ``(n1,h1)(n2,h2) = (n1 * theta(h1)(n2), h1 h2)``.

    Pair ``(n, h)`` has index ``n*|H| + h`` so a trivial action reproduces
    :func:`direct_product` exactly.
    """
    cap = default_cap() if cap is None else cap
    nn, nh = N.order, H.order
    if nn * nh > cap:
        raise OrderCapExceeded(f"order {nn * nh} exceeds cap {cap}")
    theta = action_homomorphism(N, H, action)
    tn, th = N.itable, H.itable
    n1 = np.arange(nn)[:, None, None, None]
    h1 = np.arange(nh)[None, :, None, None]
    n2 = np.arange(nn)[None, None, :, None]
    h2 = np.arange(nh)[None, None, None, :]
    npart = tn[n1, theta[h1, n2]]
    hpart = th[h1, h2]
    table = (npart * nh + hpart).reshape(nn * nh, nn * nh)
    labels = [f"({a},{b})" for a in N.labels for b in H.labels]
    return CayleyGroup(table, labels, provenance=f"semidirect product {nn}:{nh}", validate=False)


def automorphism_from_map(N: CayleyGroup, gens: Sequence[int], images: Sequence[int]) -> tuple[int, ...]:
    """Permutation of N's elements extending ``gens[i] -> images[i]``."""
    from .iso import extend_homomorphism

    f = extend_homomorphism(N, list(gens), list(images), N)
    if f is None or len(set(f.tolist())) != N.order:
        raise InvalidAction("generator images do not extend to an automorphism")
    return tuple(int(x) for x in f)
