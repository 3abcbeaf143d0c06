"""Constructors for the presented group families.

Most families are metacyclic and share one normal form: ``x^i y^j`` with
``0 <= i < M``, ``0 <= j < N``, index ``i*N + j``, and the rules

    y x y^-1 = x^r,    y^N = x^s.

Moving ``y^j`` past ``x^k`` gives ``y^j x^k = x^(k r^j) y^j``, so

    (x^i y^j)(x^k y^l) = x^(i + k r^j + s*[j+l >= N]) y^((j+l) mod N).

Every constructor re-checks its defining relations on the generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from sympy import isprime, n_order

from .core import (
    CayleyGroup,
    PermGenSpec,
    build_from_permutations,
    default_cap,
    direct_product,
)
from .errors import BadParams, OrderCapExceeded

FAMILY_NAMES = (
    "cyclic", "elementary_abelian", "dihedral", "generalized_dihedral",
    "generalized_quaternion", "semidihedral", "modular_p", "u6n", "symmetric",
    "alternating", "heisenberg", "frobenius_metacyclic",
)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict = field(default_factory=dict)

    def describe(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({args})"


def _cap(order: int, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    if order > cap:
        raise OrderCapExceeded(f"order {order} exceeds cap {cap}")


def metacyclic_table(M: int, N: int, r: int, s: int) -> np.ndarray:
    if pow(r, N, M) != 1 % M or (s * r - s) % M:
        raise BadParams("inconsistent metacyclic parameters")
    i, j, k, l = np.meshgrid(np.arange(M), np.arange(N), np.arange(M), np.arange(N), indexing="ij")
    rj = np.array([pow(r, e, M) for e in range(N)])
    wrap = (j + l) >= N
    xe = (i + k * rj[j] + s * wrap) % M
    ye = (j + l) % N
    n = M * N
    return (xe * N + ye).reshape(n, n)


def _metacyclic(M: int, N: int, r: int, s: int, names=("x", "y"), cap=None,
                provenance=None) -> CayleyGroup:
    _cap(M * N, cap)
    xs, ys = names

    def label(i, j):
        parts = []
        if i:
            parts.append(xs if i == 1 else f"{xs}^{i}")
        if j:
            parts.append(ys if j == 1 else f"{ys}^{j}")
        return "".join(parts) or "e"

    labels = [label(i, j) for i in range(M) for j in range(N)]
    return CayleyGroup(metacyclic_table(M, N, r, s), labels, provenance=provenance)


def _pw(G: CayleyGroup, a: int, k: int) -> int:
    return G.power(a, k)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise AssertionError(f"defining relation failed: {msg}")


# -- abelian ---------------------------------------------------------------

def cyclic(n: int, cap: int | None = None) -> CayleyGroup:
    if n < 1:
        raise BadParams("cyclic group needs n >= 1")
    _cap(n, cap)
    ar = np.arange(n)
    labels = ["e"] + [f"x^{i}" if i > 1 else "x" for i in range(1, n)]
    return CayleyGroup((ar[:, None] + ar[None, :]) % n, labels, provenance=f"C{n}")


def elementary_abelian(p: int, k: int, cap: int | None = None) -> CayleyGroup:
    if not isprime(p) or k < 1:
        raise BadParams("elementary_abelian needs prime p and k >= 1")
    _cap(p ** k, cap)
    G = cyclic(p)
    for _ in range(k - 1):
        G = direct_product(G, cyclic(p), cap=p ** k)
    return CayleyGroup(G.table, [",".join(str(d) for d in v) for v in itertools.product(range(p), repeat=k)],
                       provenance=f"C{p}^{k}", validate=False)


# -- metacyclic families ------------------------------------------------------

def generalized_dihedral(m: int, n: int, cap: int | None = None) -> CayleyGroup:
    """``D(m, n) = <a, b | a^m = b^n = 1, b a b^-1 = a^-1>``, n even."""
    if m < 3 or n < 2 or n % 2:
        raise BadParams("generalized_dihedral needs m >= 3 and even n >= 2")
    G = _metacyclic(m, n, -1 % m, 0, ("a", "b"), cap, f"D({m},{n})")
    a, b = n, 1
    _require(_pw(G, a, m) == 0 and G.order_of(a) == m, "a^m = 1")
    _require(G.order_of(b) == n, "b^n = 1")
    _require(G.conj(b, a) == G.inv(a), "b a b^-1 = a^-1")
    return G


def dihedral(n: int, cap: int | None = None) -> CayleyGroup:
    """Dihedral group of order 2n."""
    if n < 3:
        raise BadParams("dihedral needs n >= 3")
    G = generalized_dihedral(n, 2, cap)
    G.provenance = f"D{2 * n}"
    return G


def generalized_quaternion(m: int, cap: int | None = None) -> CayleyGroup:
    """``Q_4m = <a, b | a^2m = 1, b^2 = a^m, b a b^-1 = a^-1>``."""
    if m < 2:
        raise BadParams("generalized_quaternion needs m >= 2")
    G = _metacyclic(2 * m, 2, -1 % (2 * m), m, ("a", "b"), cap, f"Q{4 * m}")
    a, b = 2, 1
    _require(G.order_of(a) == 2 * m, "a^2m = 1")
    _require(G.mul(b, b) == _pw(G, a, m), "b^2 = a^m")
    _require(G.conj(b, a) == G.inv(a), "b a b^-1 = a^-1")
    return G


def semidihedral(n: int, cap: int | None = None) -> CayleyGroup:
    """``SD_{2^n} = <x, y | x^(2^(n-1)) = y^2 = 1, y x y^-1 = x^(2^(n-2) - 1)>``.

    For n = 3 the relation reads ``y x y^-1 = x`` and the group is abelian.
    """
    if n < 3:
        raise BadParams("semidihedral needs n >= 3")
    M = 2 ** (n - 1)
    r = 2 ** (n - 2) - 1
    G = _metacyclic(M, 2, r, 0, cap=cap, provenance=f"SD{2 ** n}")
    x, y = 2, 1
    _require(G.order_of(x) == M and G.order_of(y) == 2, "x, y orders")
    _require(G.conj(y, x) == _pw(G, x, r), "y x y^-1 = x^(2^(n-2)-1)")
    return G


def modular_p(p: int, n: int, cap: int | None = None) -> CayleyGroup:
    """``Mod_n(p) = <x, y | x^(p^(n-1)) = y^p = 1, y x y^-1 = x^(1+p^(n-2))>``.

    ``Mod_3(2)`` is isomorphic to D8.
    """
    if not isprime(p) or n < 3:
        raise BadParams("modular_p needs prime p and n >= 3")
    M = p ** (n - 1)
    r = 1 + p ** (n - 2)
    G = _metacyclic(M, p, r, 0, cap=cap, provenance=f"Mod_{n}({p})")
    x, y = p, 1
    _require(G.order_of(x) == M and G.order_of(y) == p, "x, y orders")
    _require(G.conj(y, x) == _pw(G, x, r), "y x y^-1 = x^(1+p^(n-2))")
    return G


def u6n(n: int, cap: int | None = None) -> CayleyGroup:
    """``U_6n = <x, y | x^2n = y^3 = 1, x^-1 y x = y^-1>``.

    Normal form ``y^i x^j`` with ``<y>`` normal.
    """
    if n < 1:
        raise BadParams("u6n needs n >= 1")
    G = _metacyclic(3, 2 * n, 2, 0, ("y", "x"), cap, f"U{6 * n}")
    y, x = 2 * n, 1
    _require(G.order_of(x) == 2 * n and G.order_of(y) == 3, "x^2n = y^3 = 1")
    _require(G.conj(G.inv(x), y) == G.inv(y), "x^-1 y x = y^-1")
    return G


def least_root_of_order(q: int, p: int) -> int:
    """Least ``g`` in ``2..p-1`` with multiplicative order exactly ``q`` mod ``p``."""
    for g in range(2, p):
        if n_order(g, p) == q:
            return g
    raise BadParams(f"no element of order {q} mod {p}")


def frobenius_metacyclic(p: int, q: int, cap: int | None = None) -> CayleyGroup:
    """``C_p x| C_q`` with the generator acting as ``x -> x^g``.

    ``g`` is the least residue of multiplicative order ``q``; other choices
    give conjugate actions and isomorphic groups.
    """
    if not (isprime(p) and isprime(q)) or (p - 1) % q:
        raise BadParams("frobenius_metacyclic needs primes p, q with q | p-1")
    g = least_root_of_order(q, p)
    G = _metacyclic(p, q, g, 0, cap=cap, provenance=f"C{p}:C{q}")
    x, y = q, 1
    _require(G.conj(y, x) == _pw(G, x, g), "y x y^-1 = x^g")
    return G


def metacyclic(M: int, N: int, r: int, s: int = 0, cap: int | None = None) -> CayleyGroup:
    """General ``<x, y | x^M = 1, y^N = x^s, y x y^-1 = x^r>`` of order M*N."""
    G = _metacyclic(M, N, r % M, s % M, cap=cap, provenance=f"Meta({M},{N},{r},{s})")
    return G


# -- permutation and matrix-like families ---------------------------------

def symmetric(n: int, cap: int | None = None) -> CayleyGroup:
    if n < 1:
        raise BadParams("symmetric needs n >= 1")
    gens = [tuple(range(n))]
    if n >= 2:
        gens = [tuple(list(range(1, n)) + [0]), tuple([1, 0] + list(range(2, n)))]
    G = build_from_permutations(PermGenSpec(n, tuple(gens)), cap)
    G.provenance = f"S{n}"
    return G


def alternating(n: int, cap: int | None = None) -> CayleyGroup:
    """Generated by the 3-cycles ``(0 1 k)``."""
    if n < 1:
        raise BadParams("alternating needs n >= 1")
    gens = [tuple(range(n))]
    for k in range(2, n):
        g = list(range(n))
        g[0], g[1], g[k] = 1, k, 0
        gens.append(tuple(g))
    G = build_from_permutations(PermGenSpec(n, tuple(gens)), cap)
    G.provenance = f"A{n}"
    return G


def heisenberg(p: int, cap: int | None = None) -> CayleyGroup:
    """Exponent-p extraspecial group of order p^3 (odd p).

    Triples ``(a, b, c)`` with ``(a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')``.
    """
    if not isprime(p) or p == 2:
        raise BadParams("heisenberg needs an odd prime")
    _cap(p ** 3, cap)
    a, b, c, a2, b2, c2 = np.meshgrid(*[np.arange(p)] * 6, indexing="ij")
    idx = ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p
    n = p ** 3
    labels = [f"({i},{j},{k})" for i in range(p) for j in range(p) for k in range(p)]
    G = CayleyGroup(idx.reshape(n, n), labels, provenance=f"Heis({p})")
    X, Y = p * p, p
    Zc = G.commutator(X, Y)
    _require(G.order_of(X) == p and G.order_of(Y) == p and G.order_of(Zc) == p, "exponent p")
    _require(G.commute[Zc].all(), "[x, y] central")
    return G


_BUILDERS = {
    "cyclic": (cyclic, ("n",)),
    "elementary_abelian": (elementary_abelian, ("p", "k")),
    "dihedral": (dihedral, ("n",)),
    "generalized_dihedral": (generalized_dihedral, ("m", "n")),
    "generalized_quaternion": (generalized_quaternion, ("m",)),
    "semidihedral": (semidihedral, ("n",)),
    "modular_p": (modular_p, ("p", "n")),
    "u6n": (u6n, ("n",)),
    "symmetric": (symmetric, ("n",)),
    "alternating": (alternating, ("n",)),
    "heisenberg": (heisenberg, ("p",)),
    "frobenius_metacyclic": (frobenius_metacyclic, ("p", "q")),
}


def _linear(name: str):
    from . import gf

    fn = getattr(gf, name)

    def build(p, k=1, cap=None):
        return fn(gf.build_field(p, k), cap)

    return build


for _name in ("gl2", "sl2", "pgl2", "psl2"):
    _BUILDERS[_name] = (_linear(_name), ("p", "k"))


def build_family(spec: FamilySpec, cap: int | None = None) -> CayleyGroup:
    """Construct a family member from its name and parameter map."""
    try:
        fn, names = _BUILDERS[spec.name]
    except KeyError:
        raise BadParams(f"unknown family {spec.name!r}") from None
    params = dict(spec.params)
    unknown = set(params) - set(names)
    if unknown:
        raise BadParams(f"unknown parameters for {spec.name}: {sorted(unknown)}")
    required = [n for n in names if n not in params and not (spec.name in ("gl2", "sl2", "pgl2", "psl2") and n == "k")]
    if required:
        raise BadParams(f"missing parameters for {spec.name}: {required}")
    try:
        G = fn(**{k: int(v) for k, v in params.items()}, cap=cap)
    except (TypeError, ValueError) as exc:
        raise BadParams(str(exc)) from None
    G.provenance = spec.describe()
    return G
