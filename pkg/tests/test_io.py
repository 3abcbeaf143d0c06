import base64
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from centset.core import PermGenSpec
from centset.errors import GroupFileError, OrderCapExceeded
from centset.families import FamilySpec, build_family, cyclic
from centset.io import (
    COMPRESS_ABOVE, decode_table, dumps_doc, encode_table, family_doc, group_from_doc,
    group_to_doc, load_group, permutation_doc, save_doc,
)


@pytest.mark.parametrize("spec", [FamilySpec("dihedral", {"n": 6}), FamilySpec("gl2", {"p": 3})])
def test_table_round_trip(spec, tmp_path):
    G = build_family(spec)
    for compress in (False, True):
        path = tmp_path / f"g{compress}.json"
        save_doc(group_to_doc(G, compress=compress), path)
        H = load_group(path)
        assert np.array_equal(G.table, H.table)


def test_large_tables_compress_by_default():
    G = build_family(FamilySpec("dihedral", {"n": 300}))
    assert G.order > COMPRESS_ABOVE
    doc = group_to_doc(G)
    assert "data" in doc and "table" not in doc
    assert len(dumps_doc(doc)) < 20_000
    assert np.array_equal(group_from_doc(doc).table, G.table)


@given(st.lists(st.integers(0, 6), min_size=49, max_size=49))
@settings(max_examples=80, deadline=None)
def test_codec_round_trip_arbitrary_arrays(vals):
    t = np.array(vals).reshape(7, 7)
    assert np.array_equal(decode_table(encode_table(t), 7), t)


def test_spec_documents(tmp_path):
    doc = family_doc(FamilySpec("u6n", {"n": 2}))
    assert group_from_doc(doc).order == 12
    pdoc = permutation_doc(PermGenSpec(4, ((1, 2, 3, 0), (1, 0, 2, 3))))
    assert group_from_doc(json.loads(dumps_doc(pdoc))).order == 24


def test_output_is_canonical():
    doc = group_to_doc(cyclic(3))
    assert dumps_doc(doc) == '{"format":"centset-group-v1","kind":"table","order":3,"table":[0,1,2,1,2,0,2,0,1]}\n'


BAD = [
    [],
    {"format": "other", "kind": "table", "order": 1, "table": [0]},
    {"format": "centset-group-v1", "kind": "mystery"},
    {"format": "centset-group-v1", "kind": "table", "order": 2, "table": [0, 1, 1]},
    {"format": "centset-group-v1", "kind": "table", "order": 2, "table": [0, 1, 1, 5]},
    {"format": "centset-group-v1", "kind": "table", "order": 2, "table": [0, 1, 1, True]},
    {"format": "centset-group-v1", "kind": "table", "order": 0, "table": []},
    {"format": "centset-group-v1", "kind": "table", "order": 2, "encoding": "zip", "data": ""},
    {"format": "centset-group-v1", "kind": "table", "order": 2, "encoding": "delta-rle-varint-base64",
     "data": "!!"},
    {"format": "centset-group-v1", "kind": "family", "name": "dihedral", "params": {"n": "8"}},
    {"format": "centset-group-v1", "kind": "permutation", "degree": 3, "generators": "(0 1)"},
]


@pytest.mark.parametrize("doc", BAD)
def test_bad_documents(doc):
    with pytest.raises(GroupFileError):
        group_from_doc(doc)


def test_truncated_compressed_data():
    data = encode_table(cyclic(5).table)
    raw = base64.b64decode(data)[:-1] + b"\x80"
    with pytest.raises(GroupFileError):
        decode_table(base64.b64encode(raw).decode(), 5)


def test_invalid_json_file(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(GroupFileError):
        load_group(p)


def test_cap_checked_before_decoding():
    doc = {"format": "centset-group-v1", "kind": "table", "order": 5000, "table": []}
    with pytest.raises(OrderCapExceeded):
        group_from_doc(doc, cap=100)
