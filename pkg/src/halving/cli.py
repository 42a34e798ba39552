"""Command-line interface.

Exit codes: 0 success, 1 an audit check failed, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .audit import audit
from .chains import chain_decomposition
from .constructions import SHAPES, GeneratorSpec, cross, generate
from .engine import components, halves, halving_edges, left_degree, orient_geograph, right_degree
from .errors import HalvingError
from .io import GeographDocument, format_points, load_config, save_points, to_dot, to_svg

EXIT_OK, EXIT_AUDIT_FAILED, EXIT_INPUT = 0, 1, 2


def _compute(args, out):
    g = halving_edges(load_config(args.points))
    if args.format == "edges":
        out.write("".join(f"{i} {j}\n" for i, j in g.edges))
    elif args.format == "dot":
        out.write(to_dot(g))
    else:
        og = orient_geograph(g)
        out.write(GeographDocument.build(g, components(g), og.direction, chain_decomposition(og)).dumps())
    return EXIT_OK


def _components(args, out):
    part = components(halving_edges(load_config(args.points)))
    out.write("".join(" ".join(map(str, cls)) + "\n" for cls in part))
    return EXIT_OK


def _chains(args, out):
    og = orient_geograph(halving_edges(load_config(args.points)))
    left, right = halves(og)
    out.write(f"direction: 1 {og.direction.t}\n")
    out.write("left: " + " ".join(map(str, sorted(left))) + "\n")
    out.write("right: " + " ".join(map(str, sorted(right))) + "\n")
    out.write("degrees (vertex left right):\n")
    for v in og.order:
        out.write(f"  {v} {left_degree(og, v)} {right_degree(og, v)}\n")
    out.write("chains:\n")
    for ch in chain_decomposition(og):
        out.write("  " + " ".join(map(str, ch.vertices)) + "\n")
    return EXIT_OK


def _cross(args, out):
    res = cross(load_config(args.a), load_config(args.b))
    target = Path(args.output)
    save_points(target, res.config.points)
    doc = GeographDocument.build(res.geograph, components(res.geograph))
    target.with_suffix(".json").write_text(doc.dumps(), encoding="utf-8")
    out.write(f"attempts: {res.attempts}\n")
    out.write(f"epsilon: {res.epsilon}\n")
    out.write(f"edges: {len(res.geograph.edges)}\n")
    return EXIT_OK


def _gen(args, out):
    c = generate(GeneratorSpec(args.shape, args.n, args.seed, args.bound))
    if args.output == "-":
        out.write(format_points(c.points))
    else:
        save_points(args.output, c.points)
    return EXIT_OK


def _audit(args, out):
    report = audit(load_config(args.points))
    if args.json:
        out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        out.write(report.format_text() + "\n")
    return EXIT_OK if report.passed else EXIT_AUDIT_FAILED


def _render(args, out):
    g = halving_edges(load_config(args.points))
    Path(args.output).write_text(to_svg(g, components(g)), encoding="utf-8")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="halving", description="Halving lines and underlying geographs, exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compute", help="halving edges of a point file")
    s.add_argument("points")
    s.add_argument("--format", choices=("edges", "doc", "dot"), default="edges")
    s.set_defaults(run=_compute)

    s = sub.add_parser("components", help="connected components of the underlying graph")
    s.add_argument("points")
    s.set_defaults(run=_components)

    s = sub.add_parser("chains", help="direction, halves, degrees and chains")
    s.add_argument("points")
    s.set_defaults(run=_chains)

    s = sub.add_parser("cross", help="cross construction of two point files")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(run=_cross)

    s = sub.add_parser("gen", help="generate a configuration")
    s.add_argument("--shape", choices=SHAPES, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=1000)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(run=_gen)

    s = sub.add_parser("audit", help="run every structural check")
    s.add_argument("points")
    s.add_argument("--json", action="store_true")
    s.set_defaults(run=_audit)

    s = sub.add_parser("render", help="SVG drawing of points and halving edges")
    s.add_argument("points")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(run=_render)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.run(args, out)
    except HalvingError as exc:
        print(f"halving: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"halving: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
