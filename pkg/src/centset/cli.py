"""``centset`` command-line interface.

Exit codes: 0 success, 1 error, 2 when a claims run reports a Refuted claim.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import __version__
from .analysis import DEFAULT_LATTICE_CAP, analyze, cent_count, centralizer_family, commutator_subgroup
from .catalog import build_catalog
from .claims import list_claims, render_report, run_claims
from .core import PermGenSpec, build_from_permutations, default_cap, parse_cycles
from .errors import CentsetError
from .families import FamilySpec, build_family
from .frobenius import decompose, is_frobenius
from .io import dumps_doc, family_doc, group_to_doc, load_group, permutation_doc
from .iso import DEFAULT_SEARCH_BUDGET
from .isoclinism import are_isoclinic

EXIT_OK, EXIT_ERROR, EXIT_REFUTED = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_params(items: Sequence[str]) -> dict[str, int]:
    params = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise CentsetError(f"parameter {item!r} is not of the form key=value")
        try:
            params[key] = int(val)
        except ValueError:
            raise CentsetError(f"parameter {key} must be an integer, got {val!r}") from None
    return params


def split_generators(text: str) -> list[str]:
    """Split ``"(0 1 2 3),(0 1)"`` into cycle strings, one per generator."""
    parts = re.split(r"(?<=\))\s*[,;]\s*(?=\()", text.strip())
    return [p for p in parts if p]


def cmd_build(args) -> int:
    if args.source == "family":
        spec = FamilySpec(args.name, _parse_params(args.params))
        G = build_family(spec, args.order_cap)
        doc = family_doc(spec) if args.form == "spec" else group_to_doc(G)
    else:
        if args.degree is None or args.gens is None:
            raise CentsetError("build perm needs --degree and --gens")
        gens = tuple(parse_cycles(g, args.degree) for g in split_generators(args.gens))
        spec = PermGenSpec(args.degree, gens)
        G = build_from_permutations(spec, args.order_cap)
        doc = permutation_doc(spec) if args.form == "spec" else group_to_doc(G)
    _emit(dumps_doc(doc), args.out)
    if args.out:
        print(f"wrote group of order {G.order} to {args.out}", file=sys.stderr)
    return EXIT_OK


def _text_report(d: dict) -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            if not v:
                continue
            lines.append(f"{k}:")
            lines.extend(f"  {kk}: {vv}" for kk, vv in v.items())
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    G = load_group(args.file, args.order_cap)
    d = analyze(G).to_dict()
    if args.json:
        _emit(json.dumps(d, sort_keys=True, indent=2) + "\n", None)
    else:
        d["alpha"] = f"{d['alpha']['num']}/{d['alpha']['den']}"
        _emit(_text_report(d), None)
    return EXIT_OK


def cmd_cent(args) -> int:
    G = load_group(args.file, args.order_cap)
    fam = centralizer_family(G)
    d = commutator_subgroup(G).order
    orders = sorted(fam.orders())
    doc = {"order": G.order, "centCount": fam.count, "derivedOrder": d,
           "isCG": fam.count == d + 2, "centralizerOrders": orders}
    if args.json:
        _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", None)
    else:
        _emit(f"|G| = {G.order}\n|Cent(G)| = {fam.count}\n|G'| = {d}\n"
              f"CG: {'yes' if doc['isCG'] else 'no'}\ncentralizer orders: {orders}\n", None)
    return EXIT_OK


def cmd_claims(args) -> int:
    if args.action == "list":
        for c in list_claims(args.filter):
            print(f"{c.id}\t{c.description}")
        return EXIT_OK
    report = run_claims(args.filter, args.jobs)
    _emit(render_report(report, args.format, timings=args.timings), args.out)
    if report.any_error:
        return EXIT_ERROR
    return EXIT_REFUTED if report.any_refuted else EXIT_OK


_SCAN_PREDICATES = ("cg", "not-cg", "frobenius")


def _scan_row(item: tuple[str, str]) -> dict | None:
    name, predicate = item[0], item[1]
    G = dict(build_catalog())[name]
    cc, d = cent_count(G), commutator_subgroup(G).order
    row = {"name": name, "order": G.order, "centCount": cc, "derivedOrder": d, "isCG": cc == d + 2}
    if predicate == "cg":
        keep = row["isCG"]
    elif predicate == "not-cg":
        keep = not row["isCG"]
    else:
        keep = is_frobenius(G)
        if keep:
            dec = decompose(G)
            row["kernelOrder"] = dec.kernel.order
            row["complementOrder"] = None if dec.complement is None else dec.complement.order
    return row if keep else None


def cmd_scan(args) -> int:
    names = [(n, args.predicate) for n, G in build_catalog() if G.order <= args.max_order]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_scan_row, names))
    else:
        rows = [_scan_row(x) for x in names]
    rows = sorted((r for r in rows if r is not None), key=lambda r: (r["order"], r["name"]))
    if args.format == "json":
        _emit(json.dumps(rows, sort_keys=True, indent=2) + "\n", None)
        return EXIT_OK
    cols = ["name", "order", "centCount", "derivedOrder", "isCG"]
    if args.predicate == "frobenius":
        cols += ["kernelOrder", "complementOrder"]
    if args.format == "csv":
        lines = [",".join(cols)] + [",".join(str(r[c]) for c in cols) for r in rows]
    else:
        cells = [cols] + [[str(r[c]) for c in cols] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
        lines = ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    _emit("\n".join(lines) + "\n", None)
    return EXIT_OK


def cmd_isoclinic(args) -> int:
    A = load_group(args.file_a, args.order_cap)
    B = load_group(args.file_b, args.order_cap)
    v = are_isoclinic(A, B, args.budget)
    if args.json:
        doc = {"isoclinic": v.isoclinic, "reason": v.reason, "pruned": v.pruned,
               "certificate": None if v.certificate is None else v.certificate.to_dict()}
        _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", None)
    elif v.isoclinic:
        _emit("isoclinic (certificate verified)\n", None)
    else:
        _emit(f"NOT isoclinic ({v.reason})\n", None)
    return EXIT_OK


def cmd_frobenius(args) -> int:
    G = load_group(args.file, args.order_cap)
    d = decompose(G, args.lattice_cap)
    if d is None:
        _emit(json.dumps({"frobenius": False, "order": G.order}, indent=2) + "\n", None)
        if not args.quiet:
            print("not Frobenius", file=sys.stderr)
        return EXIT_OK
    doc = {"frobenius": True, "order": G.order, **d.to_dict()}
    _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", None)
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order-cap", type=_positive, default=None,
                        help="largest group order to build (default: $CENTSET_ORDER_CAP or 2048)")
    common.add_argument("--budget", type=_positive, default=DEFAULT_SEARCH_BUDGET,
                        help="node budget for isomorphism and isoclinism searches")
    common.add_argument("--lattice-cap", type=_positive, default=DEFAULT_LATTICE_CAP,
                        help="largest order for full subgroup-lattice scans")

    p = argparse.ArgumentParser(prog="centset", description="Centralizer counts of finite groups.")
    p.add_argument("--version", action="version", version=f"centset {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="write a group file")
    b.add_argument("source", choices=("family", "perm"))
    b.add_argument("name", nargs="?", help="family name (for 'family')")
    b.add_argument("params", nargs="*", help="key=value family parameters")
    b.add_argument("--degree", type=_positive)
    b.add_argument("--gens", help='cycle notation, e.g. "(0 1 2 3),(0 1)"')
    b.add_argument("--form", choices=("table", "spec"), default="table",
                   help="write the multiplication table (default) or the generating spec")
    b.add_argument("--out", help="output path (default: stdout)")
    b.set_defaults(fn=cmd_build)

    a = sub.add_parser("analyze", parents=[common], help="invariants of a group file")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.set_defaults(fn=cmd_analyze)

    c = sub.add_parser("cent", parents=[common], help="centralizer count of a group file")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_cent)

    cl = sub.add_parser("claims", parents=[common], help="run or list the claims registry")
    cl.add_argument("action", choices=("run", "list"))
    cl.add_argument("--filter", default=None, help="id glob, e.g. 'EX25*'")
    cl.add_argument("--format", choices=("text", "json", "csv"), default="text")
    cl.add_argument("--jobs", type=_positive, default=1)
    cl.add_argument("--timings", action="store_true", help="include wall-clock runtimes (not byte-stable)")
    cl.add_argument("--out")
    cl.set_defaults(fn=cmd_claims)

    s = sub.add_parser("scan", parents=[common], help="filter the built-in catalog")
    s.add_argument("--max-order", type=_positive, default=200)
    s.add_argument("--predicate", choices=_SCAN_PREDICATES, default="cg")
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")
    s.add_argument("--jobs", type=_positive, default=1)
    s.set_defaults(fn=cmd_scan)

    i = sub.add_parser("isoclinic", parents=[common], help="test two group files for isoclinism")
    i.add_argument("file_a")
    i.add_argument("file_b")
    i.add_argument("--json", action="store_true")
    i.set_defaults(fn=cmd_isoclinic)

    f = sub.add_parser("frobenius", parents=[common], help="Frobenius kernel and complement")
    f.add_argument("file")
    f.add_argument("--quiet", action="store_true")
    f.set_defaults(fn=cmd_frobenius)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.order_cap is None:
        try:
            args.order_cap = default_cap()
        except ValueError as exc:
            print(f"centset: error: bad CENTSET_ORDER_CAP: {exc}", file=sys.stderr)
            return EXIT_ERROR
    if args.command == "build" and args.source == "family" and not args.name:
        print("centset: error: build family needs a family name", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.fn(args)
    except (CentsetError, OSError) as exc:
        print(f"centset: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
