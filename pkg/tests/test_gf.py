import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from centset.analysis import cent_count, commutator_subgroup, is_cg
from centset.errors import NotPrime, OrderCapExceeded, UnsupportedDegree
from centset.gf import build_field, gl2, gl2_order, is_irreducible, pgl2, psl2, sl2, sl2_order

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


@pytest.mark.parametrize("p,k", FIELDS)
def test_field_axioms(p, k):
    F = build_field(p, k)
    q = p ** k
    A, M = F.add, F.mul
    assert (A[0] == np.arange(q)).all() and (M[1] == np.arange(q)).all()
    assert (A == A.T).all() and (M == M.T).all()
    # distributivity, exhaustively
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    assert (M[a, A[b, c]] == A[M[a, b], M[a, c]]).all()
    assert (A[A[a, b], c] == A[a, A[b, c]]).all()
    assert (M[M[a, b], c] == M[a, M[b, c]]).all()
    # every nonzero element is invertible
    assert all((M[x] == 1).sum() == 1 for x in range(1, q))


@pytest.mark.parametrize("p,k", FIELDS)
def test_exp_log_tables(p, k):
    F = build_field(p, k)
    q = p ** k
    assert sorted(F.exp.tolist()) == list(range(1, q))
    for x in range(1, q):
        assert F.exp[F.log[x]] == x
    for i in range(q - 1):
        for j in range(q - 1):
            assert F.mul[F.exp[i], F.exp[j]] == F.exp[(i + j) % (q - 1)]


def test_gf4_matches_hand_field():
    F = build_field(2, 2)
    H = oracles.SmallField(4)
    # both encode c0 + 2*c1 and reduce by x^2 + x + 1
    for a in range(4):
        for b in range(4):
            assert F.mul[a, b] == H.mul(a, b)


@given(st.lists(st.integers(0, 2), min_size=3, max_size=4))
@settings(max_examples=60, deadline=None)
def test_irreducible_has_no_roots_deg_le_3(coeffs):
    poly = coeffs + [1]
    if len(poly) - 1 > 3:
        return
    has_root = any(sum(c * x ** i for i, c in enumerate(poly)) % 3 == 0 for x in range(3))
    assert is_irreducible(poly, 3) == (not has_root)


def test_bad_fields():
    with pytest.raises(NotPrime):
        build_field(6)
    with pytest.raises(UnsupportedDegree):
        build_field(3, 5)


@pytest.mark.parametrize("q,p,k", [(2, 2, 1), (3, 3, 1), (4, 2, 2), (5, 5, 1)])
def test_linear_group_orders(q, p, k):
    F = build_field(p, k)
    assert gl2(F).order == gl2_order(q) == (q * q - 1) * (q * q - q)
    assert sl2(F).order == sl2_order(q)
    assert pgl2(F).order == q * (q * q - 1)


def test_psl_orders():
    assert psl2(build_field(5)).order == 60
    assert psl2(build_field(7)).order == 168


@pytest.mark.parametrize("q,kind", [(3, "GL"), (3, "SL"), (4, "GL"), (3, "PGL"), (4, "PGL"), (5, "PGL")])
def test_cent_counts_match_oracle(q, kind):
    elems, mul = oracles.matrix_group(q, kind)
    F = build_field(*{3: (3, 1), 4: (2, 2), 5: (5, 1)}[q])
    G = {"GL": gl2, "SL": sl2, "PGL": pgl2}[kind](F)
    assert G.order == len(elems)
    assert cent_count(G) == oracles.cent_count(elems, mul)
    assert commutator_subgroup(G).order == oracles.derived_order(elems, mul)


def test_gl_count_formula():
    for q, (p, k) in [(3, (3, 1)), (4, (2, 2)), (5, (5, 1))]:
        G = gl2(build_field(p, k))
        assert cent_count(G) == q * q + q + 2
        assert not is_cg(G)


def test_linear_cap():
    with pytest.raises(OrderCapExceeded):
        gl2(build_field(5), cap=100)
