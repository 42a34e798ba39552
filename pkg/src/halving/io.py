"""Point files, geograph documents, DOT export and SVG rendering."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .chains import ChainDecomposition
from .engine import ComponentPartition, Direction, Geograph, canonical_edges
from .errors import CollinearTriple, DuplicatePoints, HalvingError, OddSize, ParseError
from .exact import Point, PointConfig

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)  # ZeroDivisionError on a/0


def parse_points(text: str, source: str = "<string>") -> tuple[list[Point], list[int]]:
    """Parse a point file; returns the points and the line number of each."""
    points, lines, seen = [], [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(source, lineno, f"expected two coordinates, got {len(fields)} field(s)")
        try:
            p = Point(parse_rational(fields[0]), parse_rational(fields[1]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(source, lineno, str(exc)) from None
        if p in seen:
            raise ParseError(source, lineno, f"duplicate point {p}, first seen on line {seen[p]}")
        seen[p] = lineno
        points.append(p)
        lines.append(lineno)
    return points, lines


def format_points(points: Sequence[Point]) -> str:
    return "".join(f"{p.x} {p.y}\n" for p in points)


def load_config(path) -> PointConfig:
    """Read a point file and validate it as a configuration.

    Configuration errors are re-raised as :class:`ParseError` pointing at the
    line of the offending point.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(str(path), 0, exc.strerror or str(exc)) from None
    points, lines = parse_points(text, str(path))
    try:
        return PointConfig(points)
    except OddSize as exc:
        raise ParseError(str(path), lines[-1] if lines else 0, str(exc)) from None
    except (DuplicatePoints, CollinearTriple) as exc:
        where = ", ".join(str(lines[i]) for i in exc.indices)
        raise ParseError(str(path), lines[exc.indices[-1]], f"{exc} (lines {where})") from None


def save_points(path, points: Sequence[Point]) -> None:
    Path(path).write_text(format_points(points), encoding="utf-8")


@dataclass(frozen=True)
class GeographDocument:
    points: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]
    direction: Fraction | None = None
    chains: tuple[tuple[int, ...], ...] | None = None

    @classmethod
    def build(cls, g: Geograph, part: ComponentPartition, direction: Direction | None = None,
              chains: ChainDecomposition | None = None) -> "GeographDocument":
        return cls(
            g.points,
            g.edges,
            part.classes,
            None if direction is None else direction.t,
            None if chains is None else tuple(ch.vertices for ch in chains),
        )

    def to_dict(self) -> dict:
        doc = {
            "points": [[str(p.x), str(p.y)] for p in self.points],
            "edges": [list(e) for e in self.edges],
            "components": [list(c) for c in self.components],
        }
        if self.direction is not None:
            doc["direction"] = ["1", str(self.direction)]
        if self.chains is not None:
            doc["chains"] = [list(c) for c in self.chains]
        return doc

    def dumps(self) -> str:
        """Byte-stable JSON: fixed key order, one array row per line."""
        parts = []
        for key, value in self.to_dict().items():
            if key == "direction" or not value:
                parts.append(f'  "{key}": {json.dumps(value)}')
            else:
                rows = ",\n".join("    " + json.dumps(row) for row in value)
                parts.append(f'  "{key}": [\n{rows}\n  ]')
        return "{\n" + ",\n".join(parts) + "\n}\n"

    @classmethod
    def loads(cls, text: str) -> "GeographDocument":
        try:
            raw = json.loads(text)
            points = tuple(Point(parse_rational(x), parse_rational(y)) for x, y in raw["points"])
            edges = tuple(tuple(e) for e in raw["edges"])
            comps = tuple(tuple(c) for c in raw["components"])
            direction = None
            if "direction" in raw:
                one, t = raw["direction"]
                if one != "1":
                    raise ValueError("direction must have the form [\"1\", t]")
                direction = parse_rational(t)
            chains = tuple(tuple(c) for c in raw["chains"]) if "chains" in raw else None
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise HalvingError(f"malformed geograph document: {exc}") from None
        if edges != canonical_edges(edges):
            raise HalvingError("document edges must be (i < j) pairs in lexicographic order")
        return cls(points, edges, comps, direction, chains)


def to_dot(g: Geograph) -> str:
    out = ["graph halving {"]
    for v, p in enumerate(g.points):
        out.append(f'  {v} [label="{v}: ({p.x}, {p.y})"];')
    for i, j in g.edges:
        out.append(f"  {i} -- {j};")
    out.append("}")
    return "\n".join(out) + "\n"


# rendering constants; changing any of them changes golden SVGs
VIEWBOX = 1000
PAD = 50
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")
EDGE_WIDTH = 2
POINT_RADIUS = 6


def _fit(points: Sequence[Point]):
    """Uniform scale into [PAD, VIEWBOX - PAD]^2, centred, y axis flipped."""
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or Fraction(1)
    scale = Fraction(VIEWBOX - 2 * PAD) / span
    cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2
    half = Fraction(VIEWBOX, 2)

    def f(p: Point) -> tuple[str, str]:
        x = half + (p.x - cx) * scale
        y = half - (p.y - cy) * scale
        return f"{float(round(x, 3)):.3f}", f"{float(round(y, 3)):.3f}"

    return f


def to_svg(g: Geograph, part: ComponentPartition) -> str:
    fit = _fit(g.points)
    coords = [fit(p) for p in g.points]
    label = part.label_of()
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEWBOX} {VIEWBOX}" '
        f'width="{VIEWBOX}" height="{VIEWBOX}">',
        f'<rect width="{VIEWBOX}" height="{VIEWBOX}" fill="#ffffff"/>',
    ]
    for i, j in g.edges:
        (x1, y1), (x2, y2) = coords[i], coords[j]
        color = PALETTE[label[i] % len(PALETTE)]
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" stroke-width="{EDGE_WIDTH}"/>')
    for v, (x, y) in enumerate(coords):
        color = PALETTE[label[v] % len(PALETTE)]
        out.append(f'<circle cx="{x}" cy="{y}" r="{POINT_RADIUS}" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
