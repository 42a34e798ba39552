"""Halving edges, underlying geographs, components and orientation."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from math import gcd
from typing import Iterator, Sequence

from . import _kernels
from .errors import IndexOutOfRange
from .exact import DirectedLine, Point, PointConfig, g_balance, integer_coordinates, orient


Edge = tuple[int, int]


def canonical_edges(edges) -> tuple[Edge, ...]:
    out = set()
    for i, j in edges:
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        out.add((min(i, j), max(i, j)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Geograph:
    config: PointConfig
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = canonical_edges(self.edges)
        n = self.config.n
        for i, j in edges:
            if j >= n or i < 0:
                raise IndexOutOfRange(f"edge ({i}, {j}) out of range for {n} points")
        object.__setattr__(self, "edges", edges)

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def points(self) -> tuple[Point, ...]:
        return self.config.points

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]


def _check_index(c: PointConfig, *idx: int) -> None:
    for i in idx:
        if not 0 <= i < c.n:
            raise IndexOutOfRange(f"vertex {i} out of range for {c.n} points")


def is_halving_pair(c: PointConfig, i: int, j: int) -> bool:
    """Definition-level test: the other n-2 points split evenly."""
    _check_index(c, i, j)
    if i == j:
        raise ValueError("a halving pair needs two distinct vertices")
    line = DirectedLine(c[i], c[j])
    rest = (p for k, p in enumerate(c) if k != i and k != j)
    return g_balance(rest, line) == 0


def halving_edges_bruteforce(c: PointConfig) -> Geograph:
    """O(n^3) rational enumeration straight from the definition; the oracle."""
    edges = [(i, j) for i in range(c.n) for j in range(i + 1, c.n) if is_halving_pair(c, i, j)]
    return Geograph(c, tuple(edges))


def halving_edges(c: PointConfig) -> Geograph:
    return Geograph(c, tuple(_kernels.halving_pairs(*integer_coordinates(c.points))))


@dataclass(frozen=True)
class ComponentPartition:
    classes: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def label_of(self) -> list[int]:
        label = [0] * sum(len(c) for c in self.classes)
        for k, cls in enumerate(self.classes):
            for v in cls:
                label[v] = k
        return label


def components(g: Geograph) -> ComponentPartition:
    adj = g.adjacency()
    seen = [False] * g.n
    classes = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue, members = deque([s]), [s]
        while queue:
            for u in adj[queue.popleft()]:
                if not seen[u]:
                    seen[u] = True
                    members.append(u)
                    queue.append(u)
        classes.append(tuple(sorted(members)))
    return ComponentPartition(tuple(classes))


@dataclass(frozen=True)
class Direction:
    """East is (1, t); North is East rotated a quarter turn counter-clockwise."""

    t: Fraction

    def project(self, p: Point) -> Fraction:
        return p.x + self.t * p.y

    def north(self, p: Point) -> Fraction:
        return p.y - self.t * p.x

    @property
    def east_vector(self) -> Point:
        return Point(Fraction(1), self.t)


def slope_sequence() -> Iterator[Fraction]:
    """0, 1, -1, 1/2, -1/2, 1/3, -1/3, 2/3, -2/3, 1/4, ...

    Rationals in [-1, 1] by denominator, then numerator, positive first.
    """
    yield Fraction(0)
    for q in count(1):
        for p in range(1, q + 1):
            if gcd(p, q) == 1:
                yield Fraction(p, q)
                yield Fraction(-p, q)


def is_generic(points: Sequence[Point], edges: Sequence[Edge], t: Fraction) -> bool:
    d = Direction(t)
    proj = [d.project(p) for p in points]
    if len(set(proj)) != len(proj):
        return False
    # with distinct projections no edge can be perpendicular to East,
    # but the second invariant is checked on its own terms anyway
    return all((points[j].x - points[i].x) + t * (points[j].y - points[i].y) != 0 for i, j in edges)


def choose_direction(g: Geograph) -> Direction:
    for t in slope_sequence():
        if is_generic(g.points, g.edges, t):
            return Direction(t)
    raise AssertionError("unreachable")  # pragma: no cover


@dataclass(frozen=True)
class OrientedGeograph:
    geograph: Geograph
    direction: Direction
    order: tuple[int, ...] = field(init=False)
    rank: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        g, d = self.geograph, self.direction
        if not is_generic(g.points, g.edges, d.t):
            raise ValueError(f"direction t={d.t} is not generic for this geograph")
        proj = [d.project(p) for p in g.points]
        order = tuple(sorted(range(g.n), key=proj.__getitem__))
        rank = [0] * g.n
        for r, v in enumerate(order):
            rank[v] = r
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rank", tuple(rank))

    @property
    def n(self) -> int:
        return self.geograph.n

    def projection(self, v: int) -> Fraction:
        return self.direction.project(self.geograph.points[v])


def orient_geograph(g: Geograph, direction: Direction | Fraction | None = None) -> OrientedGeograph:
    if direction is None:
        direction = choose_direction(g)
    elif not isinstance(direction, Direction):
        direction = Direction(Fraction(direction))
    return OrientedGeograph(g, direction)


def _neighbors(og: OrientedGeograph, v: int) -> list[int]:
    _check_index(og.geograph.config, v)
    return [u for i, j in og.geograph.edges for u in ((j,) if i == v else (i,) if j == v else ())]


def left_degree(og: OrientedGeograph, v: int) -> int:
    return sum(og.rank[u] < og.rank[v] for u in _neighbors(og, v))


def right_degree(og: OrientedGeograph, v: int) -> int:
    return sum(og.rank[u] > og.rank[v] for u in _neighbors(og, v))


def halves(og: OrientedGeograph) -> tuple[frozenset[int], frozenset[int]]:
    h = og.n // 2
    return frozenset(og.order[:h]), frozenset(og.order[h:])


def induced_split(line: DirectedLine, points: Sequence[Point], members: Sequence[int]) -> tuple[frozenset, frozenset]:
    """(West members, East members) of ``members`` relative to ``line``."""
    west = frozenset(v for v in members if orient(line.base, line.tip, points[v]) > 0)
    east = frozenset(v for v in members if orient(line.base, line.tip, points[v]) < 0)
    return west, east
