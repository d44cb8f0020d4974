"""nacset command line: generate, check, verify-properties, render, info.

Exit codes: 0 accept or success, 1 reject or failed property, 2 usage or
input error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .decider import Reason, Rejected, Verdict, Witness, build_labeling, check_cardinality, \
    check_layers, decide
from .generator import InadmissibleCardinality, generate
from .geometry import DegenerateHull, convex_layers
from .pointfile import PointFileError, VerdictRecord, format_points, read_points
from .render import svg_document
from .tree import tree_shape_for

OK, REJECT, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fail(msg: str) -> int:
    print(f"nacset: {msg}", file=sys.stderr)
    return USAGE


def _layers_for_render(points):
    try:
        return convex_layers(points).as_tuples()
    except DegenerateHull:
        return oracle.onion_layers(points)


def cmd_generate(args) -> int:
    try:
        d = generate(args.n)
    except InadmissibleCardinality as e:
        return _fail(str(e))
    except ValueError as e:
        return _fail(str(e))
    if args.format == "json":
        doc = {"n": d.n, "type": d.shape.kind.value, "k": d.shape.k,
               "grid_bound": d.grid_bound, "points": [list(p) for p in d.as_tuples()]}
        text = json.dumps(doc) + "\n"
    else:
        text = format_points(d.as_tuples())
    _write(args.out, text)
    if args.render:
        _write(args.render, svg_document(d.labeling.layers.as_tuples(), d.labeling))
    return OK


def _fmt_point(p) -> str:
    return f"({p[0]},{p[1]})"


def cmd_check(args) -> int:
    try:
        pts = read_points(args.path)
    except PointFileError as e:
        return _fail(str(e))
    verdict = None
    if args.verify_gp:
        triple = oracle.check_general_position(pts)
        if triple is not None:
            verdict = Verdict(False, tree_shape_for(len(pts)), None,
                              Reason.DEGENERATE_COLLINEARITY, Witness(tuple(triple)))
    if verdict is None:
        verdict = decide(pts)
    rec = VerdictRecord.from_verdict(verdict)
    if args.json:
        print(rec.to_json())
    elif verdict.accepted:
        print(f"accept {rec.type} k={rec.k} n={len(pts)}")
    else:
        parts = ["reject", rec.reason]
        parts += [f"{key}={json.dumps(v, separators=(',', ':'))}" for key, v in rec.detail.items()]
        if rec.witness:
            parts.append("witness " + " ".join(map(_fmt_point, rec.witness)))
        print(" ".join(parts))
    return OK if verdict.accepted else REJECT


def _labeling_of(pts):
    shape = check_cardinality(len(pts))
    return build_labeling(shape, check_layers(pts, shape))


def cmd_verify_properties(args) -> int:
    try:
        pts = read_points(args.path)
    except PointFileError as e:
        return _fail(str(e))
    if len(pts) > args.cap:
        return _fail(f"{len(pts)} points exceed the brute-force cap {args.cap}")
    names = ["nested", "adoptable", "well-laid", "internal-separation", "external-separation"]
    try:
        rows = oracle.property_suite(_labeling_of(pts), args.cap)
    except Rejected as e:
        why = {"no-labeling": e.reason.value}
        rows = [oracle.PropertyReport(name, False, why) for name in names]
    rows.append(oracle.naive_check(pts, args.cap))
    triple = oracle.check_general_position(pts, args.cap)
    rows.append(oracle.PropertyReport("general-position", triple is None,
                                      {"triple": list(triple)} if triple else {}))
    width = max(len(r.name) for r in rows)
    for r in rows:
        line = f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}"
        if r.witness:
            line += "  " + json.dumps(r.witness, separators=(",", ":"))
        print(line)
    return OK if all(rows) else REJECT


def cmd_render(args) -> int:
    try:
        pts = read_points(args.path)
    except PointFileError as e:
        return _fail(str(e))
    v = decide(pts)
    if v.accepted:
        svg = svg_document(v.labeling.layers.as_tuples(), v.labeling)
    else:
        svg = svg_document(_layers_for_render(pts))
    _write(args.out, svg)
    return OK


def cmd_info(args) -> int:
    try:
        pts = read_points(args.path)
    except PointFileError as e:
        return _fail(str(e))
    n = len(pts)
    shape = tree_shape_for(n)
    if shape is None:
        print(f"n={n} inadmissible")
        return OK
    expected = shape.layer_sizes()
    try:
        observed = convex_layers(pts).sizes
        layers = "[" + ",".join(map(str, observed)) + "]"
        if observed != expected:
            layers += " expected [" + ",".join(map(str, expected)) + "]"
    except DegenerateHull:
        layers = "degenerate"
    top = max((max(abs(x), abs(y)) for x, y in pts), default=0)
    print(f"n={n} {shape.kind.value} k={shape.k} layers {layers} "
          f"bound {shape.grid_bound} max {top}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nacset", description="Nested almost convex point sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write the canonical drawing for n points")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--out", help="output file (default stdout)")
    g.add_argument("--format", choices=["text", "json"], default="text")
    g.add_argument("--render", metavar="SVG", help="also write an SVG picture")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="decide whether a point file is nested almost convex")
    c.add_argument("path")
    c.add_argument("--json", action="store_true")
    c.add_argument("--verify-gp", action="store_true",
                   help="reject collinear triples anywhere before deciding")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify-properties", help="run the brute-force property suite")
    v.add_argument("path")
    v.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    v.set_defaults(func=cmd_verify_properties)

    r = sub.add_parser("render", help="draw a point file as SVG")
    r.add_argument("path")
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_render)

    i = sub.add_parser("info", help="summarize a point file")
    i.add_argument("path")
    i.set_defaults(func=cmd_info)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        return _fail(str(e))
    except OSError as e:
        return _fail(str(e))


if __name__ == "__main__":
    sys.exit(main())
