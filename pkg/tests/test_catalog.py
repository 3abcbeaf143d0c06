from collections import Counter

from centset.analysis import is_abelian
from centset.catalog import build_catalog, c3_wreath_c3, catalog_invariants, central_product_c4_d8
from centset.iso import are_isomorphic


def test_catalog_size_and_bound():
    cat = build_catalog()
    assert 150 <= len(cat) <= 260
    assert all(G.order <= 200 for _, G in cat)
    names = [n for n, _ in cat]
    assert len(set(names)) == len(names)


def test_catalog_is_deterministic():
    a = [(n, G.order) for n, G in build_catalog()]
    b = [(n, G.order) for n, G in build_catalog()]
    assert a == b


def test_members_pairwise_non_isomorphic_within_buckets():
    buckets = {}
    for name, G in build_catalog(64):
        buckets.setdefault(catalog_invariants(G), []).append(G)
    for groups in buckets.values():
        for i, A in enumerate(groups):
            for B in groups[i + 1:]:
                assert not are_isomorphic(A, B)


def test_catalog_mix():
    cat = build_catalog()
    nonab = Counter(G.order for _, G in cat if not is_abelian(G))
    # complete at these orders: 9 non-abelian groups of order 16, 2 of order 27
    assert nonab[16] == 9 and nonab[27] == 2
    assert nonab[81] >= 4
    assert sum(not is_abelian(G) for _, G in cat) > 100


def test_special_constructions():
    W = c3_wreath_c3()
    assert W.order == 81 and not is_abelian(W)
    P = central_product_c4_d8()
    assert P.order == 16
