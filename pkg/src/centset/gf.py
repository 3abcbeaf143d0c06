"""GF(p^k) arithmetic tables and the groups GL(2,q), SL(2,q), PGL(2,q), PSL(2,q).

Field elements are integers ``0..q-1`` encoding polynomial coefficients in
base ``p`` (``c0 + c1*p + ...``); 0 and 1 are the additive and
multiplicative identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from sympy import isprime

from .core import CayleyGroup, closure_group, default_cap
from .errors import NotPrime, OrderCapExceeded, UnsupportedDegree

MAX_FIELD_ORDER = 81


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of ``num`` by monic ``den``; coefficient lists low degree first."""
    num = num[:]
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i] % p
        if c:
            for j in range(d + 1):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    return [c % p for c in num[:d]] + [0] * max(0, d - len(num))


def _monic_polys(p: int, k: int):
    """Monic degree-k polynomials, lexicographic in (c_{k-1}, ..., c_0)."""
    for high_first in itertools.product(range(p), repeat=k):
        yield list(reversed(high_first)) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for f in _monic_polys(p, d):
            if not any(_poly_mod(poly, f, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    poly: tuple[int, ...]
    add: np.ndarray = field(repr=False, compare=False)
    mul: np.ndarray = field(repr=False, compare=False)
    exp: np.ndarray = field(repr=False, compare=False)
    log: np.ndarray = field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p ** self.k

    @cached_property
    def neg(self) -> np.ndarray:
        return np.argmin(self.add, axis=1)

    @cached_property
    def inv(self) -> np.ndarray:
        out = np.zeros(self.q, dtype=np.int64)
        out[1:] = np.argmax(self.mul[1:] == 1, axis=1)
        return out

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    @property
    def generator(self) -> int:
        """Least primitive element."""
        return int(self.exp[1]) if self.q > 2 else 1

    def label(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        if a == 0:
            return "0"
        return f"g^{int(self.log[a])}"


def build_field(p: int, k: int = 1) -> FieldSpec:
    """GF(p^k) using the lexicographically smallest monic irreducible polynomial."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if not 1 <= k <= 4 or p ** k > MAX_FIELD_ORDER:
        raise UnsupportedDegree(f"GF({p}^{k}) is outside the supported range")
    q = p ** k
    if k == 1:
        poly: tuple[int, ...] = (0, 1)
    else:
        poly = tuple(next(f for f in _monic_polys(p, k) if is_irreducible(f, p)))
    digits = [[(x // p ** i) % p for i in range(k)] for x in range(q)]
    weights = np.array([p ** i for i in range(k)])
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            add[a, b] = sum(((x + y) % p) * w for x, y, w in zip(digits[a], digits[b], weights))
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(digits[a]):
                for j, y in enumerate(digits[b]):
                    prod[i + j] += x * y
            red = _poly_mod(prod, list(poly), p) if k > 1 else [prod[0] % p]
            mul[a, b] = sum(c * w for c, w in zip(red, weights))
    # least primitive element
    exp = log = None
    for g in range(1, q):
        powers = [1]
        for _ in range(q - 2):
            powers.append(int(mul[powers[-1], g]))
        if len(set(powers)) == q - 1:
            exp = np.array(powers, dtype=np.int64)
            log = np.zeros(q, dtype=np.int64)
            log[exp] = np.arange(q - 1)
            break
    assert exp is not None, "multiplicative group is not cyclic"
    for arr in (add, mul, exp, log):
        arr.setflags(write=False)
    return FieldSpec(p, k, poly, add, mul, exp, log)


# -- 2x2 matrices ---------------------------------------------------

Mat2 = tuple[int, int, int, int]


def _matmul(F: FieldSpec, x: Mat2, y: Mat2) -> Mat2:
    a, b, c, d = x
    e, f, g, h = y
    M, A = F.mul, F.add
    return (int(A[M[a, e], M[b, g]]), int(A[M[a, f], M[b, h]]),
            int(A[M[c, e], M[d, g]]), int(A[M[c, f], M[d, h]]))


def det(F: FieldSpec, m: Mat2) -> int:
    a, b, c, d = m
    return F.sub(int(F.mul[a, d]), int(F.mul[b, c]))


def _canon(F: FieldSpec, m: Mat2) -> Mat2:
    """Scalar multiple whose first nonzero entry (scan a, b, c, d) is 1."""
    lead = next(x for x in m if x)
    s = int(F.inv[lead])
    return tuple(int(F.mul[s, x]) for x in m)  # type: ignore[return-value]


def _label(F: FieldSpec, m: Mat2) -> str:
    a, b, c, d = (F.label(x) for x in m)
    return f"[[{a},{b}],[{c},{d}]]"


def _sorted_with_identity(elems, identity):
    rest = sorted(e for e in elems if e != identity)
    return [identity] + rest


def _additive_basis(F: FieldSpec) -> list[int]:
    return [F.p ** i for i in range(F.k)]


def _gl_generators(F: FieldSpec) -> list[Mat2]:
    g = F.generator
    return [(g, 0, 0, 1), (1, 1, 0, 1), (0, 1, 1, 0)]


def _sl_generators(F: FieldSpec) -> list[Mat2]:
    gens = []
    for a in _additive_basis(F):
        gens.append((1, a, 0, 1))
        gens.append((1, 0, a, 1))
    return gens


def gl2_order(q: int) -> int:
    return (q * q - 1) * (q * q - q)


def sl2_order(q: int) -> int:
    return q * (q - 1) * (q + 1)


def psl2_order(q: int) -> int:
    return sl2_order(q) // (2 if q % 2 else 1)


def _check_cap(order: int, cap: int | None) -> int:
    cap = default_cap() if cap is None else cap
    if order > cap:
        raise OrderCapExceeded(f"order {order} exceeds cap {cap}")
    return cap


def gl2(F: FieldSpec, cap: int | None = None) -> CayleyGroup:
    cap = _check_cap(gl2_order(F.q), cap)
    mats = [m for m in itertools.product(range(F.q), repeat=4) if det(F, m)]
    elems = _sorted_with_identity(mats, (1, 0, 0, 1))
    G, _ = closure_group((1, 0, 0, 1), _gl_generators(F), lambda x, y: _matmul(F, x, y), cap,
                         elements=elems, label=lambda m: _label(F, m), provenance=f"GL(2,{F.q})")
    return G


def sl2(F: FieldSpec, cap: int | None = None) -> CayleyGroup:
    cap = _check_cap(sl2_order(F.q), cap)
    mats = [m for m in itertools.product(range(F.q), repeat=4) if det(F, m) == 1]
    elems = _sorted_with_identity(mats, (1, 0, 0, 1))
    G, _ = closure_group((1, 0, 0, 1), _sl_generators(F), lambda x, y: _matmul(F, x, y), cap,
                         elements=elems, label=lambda m: _label(F, m), provenance=f"SL(2,{F.q})")
    return G


def pgl2(F: FieldSpec, cap: int | None = None) -> CayleyGroup:
    cap = _check_cap(sl2_order(F.q), cap)
    mats = {_canon(F, m) for m in itertools.product(range(F.q), repeat=4) if det(F, m)}
    elems = _sorted_with_identity(mats, (1, 0, 0, 1))
    gens = [_canon(F, g) for g in _gl_generators(F)]
    G, _ = closure_group((1, 0, 0, 1), gens, lambda x, y: _canon(F, _matmul(F, x, y)), cap,
                         elements=elems, label=lambda m: _label(F, m), provenance=f"PGL(2,{F.q})")
    return G


def psl2(F: FieldSpec, cap: int | None = None) -> CayleyGroup:
    cap = _check_cap(psl2_order(F.q), cap)
    mats = {_canon(F, m) for m in itertools.product(range(F.q), repeat=4) if det(F, m) == 1}
    elems = _sorted_with_identity(mats, (1, 0, 0, 1))
    gens = [_canon(F, g) for g in _sl_generators(F)]
    G, _ = closure_group((1, 0, 0, 1), gens, lambda x, y: _canon(F, _matmul(F, x, y)), cap,
                         elements=elems, label=lambda m: _label(F, m), provenance=f"PSL(2,{F.q})")
    return G


def field_from_q(q: int) -> FieldSpec:
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            r = q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                raise NotPrime(f"{q} is not a prime power")
            return build_field(p, k)
    raise NotPrime(f"{q} is not a prime power")
