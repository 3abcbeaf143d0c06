"""Reading and writing ``centset-group-v1`` group files.

Three kinds of document share the ``format`` tag::

    {"format": "centset-group-v1", "kind": "permutation", "degree": m, "generators": [[...], ...]}
    {"format": "centset-group-v1", "kind": "table", "order": n, "table": [... n*n entries ...]}
    {"format": "centset-group-v1", "kind": "family", "name": "dihedral", "params": {"n": 8}}

Tables of order above 512 are stored compressed instead of as a flat list::

    {"kind": "table", "order": n, "encoding": "delta-rle-varint-base64", "data": "..."}

Compression of the row-major entries t[0..n*n):

1. delta: d[i] = (t[i] - t[i-1]) mod n, with t[-1] taken as 0;
2. run-length: consecutive equal deltas become (value, count) pairs;
3. each value and count is written as an unsigned LEB128 varint;
4. the byte string is base64 encoded (standard alphabet, padded).

Tables built from normal forms (the metacyclic families) are mostly runs of
delta 1 and shrink by orders of magnitude.  Matrix groups list elements
lexicographically and gain little.
"""

from __future__ import annotations

import base64
import json
from pathlib import Path
from typing import Any

import numpy as np

from .core import CayleyGroup, PermGenSpec, build_from_permutations, default_cap
from .errors import GroupFileError, OrderCapExceeded
from .families import FamilySpec, build_family

FORMAT = "centset-group-v1"
ENCODING = "delta-rle-varint-base64"
COMPRESS_ABOVE = 512


def _varint(x: int, out: bytearray) -> None:
    while True:
        b = x & 0x7F
        x >>= 7
        if x:
            out.append(b | 0x80)
        else:
            out.append(b)
            return


def _read_varints(buf: bytes) -> list[int]:
    vals, cur, shift = [], 0, 0
    for b in buf:
        cur |= (b & 0x7F) << shift
        if b & 0x80:
            shift += 7
        else:
            vals.append(cur)
            cur, shift = 0, 0
    if shift:
        raise GroupFileError("truncated varint in table data")
    return vals


def encode_table(table: np.ndarray) -> str:
    n = table.shape[0]
    flat = table.astype(np.int64).ravel()
    delta = np.diff(flat, prepend=0) % n
    # run boundaries
    starts = np.flatnonzero(np.diff(delta, prepend=-1) != 0)
    counts = np.diff(np.append(starts, len(delta)))
    out = bytearray()
    for v, c in zip(delta[starts].tolist(), counts.tolist()):
        _varint(v, out)
        _varint(c, out)
    return base64.b64encode(bytes(out)).decode("ascii")


def decode_table(data: str, n: int) -> np.ndarray:
    try:
        raw = base64.b64decode(data.encode("ascii"), validate=True)
    except (ValueError, UnicodeEncodeError) as exc:
        raise GroupFileError(f"bad base64 table data: {exc}") from None
    vals = _read_varints(raw)
    if len(vals) % 2:
        raise GroupFileError("table data has an unpaired run")
    values = np.array(vals[0::2], dtype=np.int64)
    counts = np.array(vals[1::2], dtype=np.int64)
    if (values >= n).any() or (counts < 1).any():
        raise GroupFileError("run value out of range or empty run")
    if int(counts.sum()) != n * n:
        raise GroupFileError(f"table data has {int(counts.sum())} entries, expected {n * n}")
    delta = np.repeat(values, counts)
    return (np.cumsum(delta) % n).reshape(n, n)


def group_to_doc(G: CayleyGroup, compress: bool | None = None) -> dict[str, Any]:
    """Table-form document for ``G``; compression defaults to order > 512."""
    n = G.order
    if compress is None:
        compress = n > COMPRESS_ABOVE
    doc: dict[str, Any] = {"format": FORMAT, "kind": "table", "order": n}
    if compress:
        doc["encoding"] = ENCODING
        doc["data"] = encode_table(G.table)
    else:
        doc["table"] = G.table.astype(np.int64).ravel().tolist()
    return doc


def family_doc(spec: FamilySpec) -> dict[str, Any]:
    return {"format": FORMAT, "kind": "family", "name": spec.name, "params": dict(spec.params)}


def permutation_doc(spec: PermGenSpec) -> dict[str, Any]:
    return {"format": FORMAT, "kind": "permutation", "degree": spec.degree,
            "generators": [list(g) for g in spec.generators]}


def _int(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise GroupFileError(f"{key!r} must be a positive integer")
    return v


def group_from_doc(doc: Any, cap: int | None = None) -> CayleyGroup:
    """Build and validate the group described by a parsed document."""
    cap = default_cap() if cap is None else cap
    if not isinstance(doc, dict):
        raise GroupFileError("group file must be a JSON object")
    if doc.get("format") != FORMAT:
        raise GroupFileError(f"format must be {FORMAT!r}")
    kind = doc.get("kind")
    if kind == "family":
        name, params = doc.get("name"), doc.get("params", {})
        if not isinstance(name, str) or not isinstance(params, dict):
            raise GroupFileError("family documents need a string 'name' and object 'params'")
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in params.values()):
            raise GroupFileError("family parameters must be integers")
        return build_family(FamilySpec(name, params), cap)
    if kind == "permutation":
        degree = _int(doc, "degree")
        gens = doc.get("generators")
        if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
            raise GroupFileError("'generators' must be a list of integer lists")
        return build_from_permutations(PermGenSpec(degree, tuple(tuple(g) for g in gens)), cap)
    if kind == "table":
        n = _int(doc, "order")
        if n > cap:
            raise OrderCapExceeded(f"order {n} exceeds cap {cap}")
        if "data" in doc:
            if doc.get("encoding") != ENCODING:
                raise GroupFileError(f"unknown table encoding {doc.get('encoding')!r}")
            table = decode_table(doc["data"], n)
        else:
            flat = doc.get("table")
            if not isinstance(flat, list) or len(flat) != n * n:
                raise GroupFileError(f"'table' must be a flat list of {n * n} entries")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in flat):
                raise GroupFileError("table entries must be integers")
            table = np.array(flat, dtype=np.int64).reshape(n, n)
            if (table < 0).any() or (table >= n).any():
                raise GroupFileError("table entries out of range")
        return CayleyGroup(table)
    raise GroupFileError(f"unknown kind {kind!r}")


def load_group(path: str | Path, cap: int | None = None) -> CayleyGroup:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"{path}: not valid JSON ({exc})") from None
    G = group_from_doc(doc, cap)
    if G.provenance is None or not isinstance(G.provenance, str):
        G.provenance = str(path)
    return G


def dumps_doc(doc: dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def save_doc(doc: dict[str, Any], path: str | Path) -> None:
    Path(path).write_text(dumps_doc(doc))
