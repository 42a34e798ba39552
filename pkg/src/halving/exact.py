"""Exact rational points, directed lines and sign predicates.

Scalars are :class:`fractions.Fraction`, which is already canonical (reduced,
positive denominator, zero is 0/1). Floats are refused outright: halving is a
sign condition and a rounded coordinate can create or destroy an edge.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import _kernels
from .errors import CollinearTriple, DuplicatePoints, OddSize, SingularTransform


def scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    return Fraction(value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(scalar(x), scalar(y))

    def __str__(self):
        return f"({self.x}, {self.y})"


class DirectedLine(NamedTuple):
    """Line through ``base`` travelling towards ``tip``; that travel direction is North."""

    base: Point
    tip: Point

    @classmethod
    def through(cls, base: Point, tip: Point) -> "DirectedLine":
        if base == tip:
            raise ValueError("a directed line needs two distinct points")
        return cls(base, tip)

    def reversed(self) -> "DirectedLine":
        return DirectedLine(self.tip, self.base)


class Side(enum.IntEnum):
    EAST = -1
    ON = 0
    WEST = 1


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p): +1 if r is strictly left of p->q."""
    c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (c > 0) - (c < 0)


def side_of(line: DirectedLine, p: Point) -> Side:
    return Side(orient(line.base, line.tip, p))


def g_balance(points: Iterable[Point], line: DirectedLine) -> int:
    """West count minus East count; points on the line count for nothing."""
    return sum(orient(line.base, line.tip, p) for p in points)


def integer_coordinates(points: Sequence[Point]) -> tuple[list[int], list[int]]:
    """Scale by the common denominator; a positive scale keeps every orient sign."""
    scale = math.lcm(*(v.denominator for p in points for v in p)) if points else 1
    xs = [int(p.x * scale) for p in points]
    ys = [int(p.y * scale) for p in points]
    return xs, ys


def general_position_violation(points: Sequence[Point]):
    """Return the first duplicate pair or collinear triple as an exception, else None."""
    seen = {}
    for i, p in enumerate(points):
        if p in seen:
            return DuplicatePoints(seen[p], i)
        seen[p] = i
    if len(points) < 3:
        return None
    triple = _kernels.collinear_triple(*integer_coordinates(points))
    if triple is not None:
        return CollinearTriple(*triple)
    return None


class PointConfig:
    """Even-sized point set in general position.

    Construction validates everything; an instance is never invalid.
    """

    __slots__ = ("points",)

    def __init__(self, points: Iterable):
        pts = tuple(p if isinstance(p, Point) else Point.of(*p) for p in points)
        if len(pts) < 2 or len(pts) % 2:
            raise OddSize(f"need an even number of points (at least 2), got {len(pts)}")
        err = general_position_violation(pts)
        if err is not None:
            raise err
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("PointConfig is immutable")

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return isinstance(other, PointConfig) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointConfig({[(str(p.x), str(p.y)) for p in self.points]})"


def affine_apply(m, t, c: PointConfig) -> PointConfig:
    """Map every point p to m @ p + t; ``m`` is ((a, b), (c, d))."""
    (a, b), (cc, d) = ((scalar(v) for v in row) for row in m)
    tx, ty = (scalar(v) for v in t)
    if a * d - b * cc == 0:
        raise SingularTransform("affine matrix has zero determinant")
    return PointConfig(Point(a * p.x + b * p.y + tx, cc * p.x + d * p.y + ty) for p in c)

