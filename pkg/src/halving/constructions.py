"""Segmentarizing, the cross construction and configuration generators."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice

import numpy as np

from .engine import (
    Direction, Geograph, choose_direction, halving_edges, induced_split, slope_sequence,
)
from .errors import (
    DegenerateExtent, ExhaustedSampling, GeneralPositionClash, HalvingError, RetryLimitExceeded,
)
from .exact import DirectedLine, Point, PointConfig, g_balance, general_position_violation, orient

INITIAL_EPSILON = Fraction(1, 4)
MAX_SHRINKS = 64
# translations of the second block tried per epsilon before shrinking
CLASH_PERTURBATIONS = 16
MAX_REJECTIONS = 10_000


def segmentarize(c: PointConfig, axis: Direction, epsilon) -> PointConfig:
    """Squeeze ``c`` into a thin segment along ``axis``.

    Coordinates become (projection on East, epsilon * projection on North),
    centred and uniformly rescaled so the long coordinate spans [-1, 1].
    The frame change has determinant 1 + t^2 > 0, so halving pairs survive.
    """
    epsilon = Fraction(epsilon)
    if not 0 < epsilon <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    us = [axis.project(p) for p in c]
    ws = [axis.north(p) for p in c]
    lo, hi = min(us), max(us)
    if lo == hi:
        raise DegenerateExtent(f"all points project to {lo} along t={axis.t}")
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    wmid = (min(ws) + max(ws)) / 2
    return PointConfig(Point((u - mid) / half, epsilon * (w - wmid) / half) for u, w in zip(us, ws))


def _center_on_median_gap(c: PointConfig) -> list[Point]:
    """Stretch the long coordinate so the two halves sit at x <= -1 and x >= 1."""
    xs = sorted(p.x for p in c)
    h = c.n // 2
    left, right = xs[h - 1], xs[h]
    mid, half = (left + right) / 2, (right - left) / 2
    return [Point((p.x - mid) / half, p.y) for p in c]


def _block(c: PointConfig, epsilon: Fraction) -> list[Point]:
    axis = choose_direction(Geograph(c, ()))
    return _center_on_median_gap(segmentarize(c, axis, epsilon))


@dataclass(frozen=True)
class CrossResult:
    config: PointConfig
    geograph: Geograph
    component_map: tuple[range, range]
    attempts: int
    epsilon: Fraction


def cross_violations(g: Geograph, expected_edges, ranges) -> list[str]:
    """Everything wrong with a candidate cross; empty means verified."""
    problems = []
    if g.edges != tuple(sorted(expected_edges)):
        problems.append("edge set differs from the reindexed disjoint union")
    pts = g.points
    for mine, other in (ranges, ranges[::-1]):
        splits = set()
        for i, j in g.edges:
            if i in mine and j in mine:
                line = DirectedLine(pts[i], pts[j])
                if g_balance((pts[v] for v in other), line) != 0:
                    problems.append(f"edge ({i}, {j}) does not halve the other block")
                west, east = induced_split(line, pts, other)
                splits.add(frozenset((west, east)))
        if len(splits) > 1:
            problems.append("one block's lines split the other block in different ways")
    return problems


def cross(a: PointConfig, b: PointConfig) -> CrossResult:
    """Superimpose a flattened copy of ``a`` and an upright copy of ``b``.

    The candidate is recomputed from scratch and accepted only when its
    halving edges are exactly those of ``a`` and ``b``; otherwise both blocks
    are flattened further and the attempt repeated.
    """
    ga, gb = halving_edges(a), halving_edges(b)
    na = a.n
    ranges = (range(0, na), range(na, na + b.n))
    expected = list(ga.edges) + [(i + na, j + na) for i, j in gb.edges]
    epsilon = INITIAL_EPSILON
    clashes = 0
    for attempt in range(1, MAX_SHRINKS + 1):
        block_a = _block(a, epsilon)
        # quarter turn: b's long axis becomes vertical
        block_b = [Point(-p.y, p.x) for p in _block(b, epsilon)]
        config = None
        for shift in islice(slope_sequence(), CLASH_PERTURBATIONS):
            dx = shift * epsilon / 2
            pts = block_a + [Point(p.x + dx, p.y) for p in block_b]
            if general_position_violation(pts) is None:
                config = PointConfig(pts)
                break
        if config is None:
            clashes += 1
        else:
            g = halving_edges(config)
            if not cross_violations(g, expected, ranges):
                return CrossResult(config, g, ranges, attempt, epsilon)
        epsilon /= 2
    if clashes == MAX_SHRINKS:
        raise GeneralPositionClash("every superposition had a duplicate or collinear triple")
    raise RetryLimitExceeded(f"cross did not verify after {MAX_SHRINKS} shrink iterations")


SHAPES = ("convex", "star", "random")
STAR = ((0, 0), (4, 0), (2, 4), (2, 1))


@dataclass(frozen=True)
class GeneratorSpec:
    shape: str
    n: int
    seed: int = 0
    bound: int = 1000

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise HalvingError(f"unknown shape {self.shape!r}; expected one of {', '.join(SHAPES)}")
        if self.n < 2 or self.n % 2:
            raise HalvingError(f"n must be even and at least 2, got {self.n}")
        if self.shape in ("convex", "star") and self.n < 4:
            raise HalvingError(f"{self.shape} needs n >= 4")
        if self.shape == "star" and self.n != 4:
            raise HalvingError("the star shape exists only for n = 4")
        if self.bound < 1:
            raise HalvingError("bound must be positive")


def _convex(n: int) -> PointConfig:
    # integer points on a parabola: strictly convex, all slopes distinct
    h = n // 2
    return PointConfig((k, k * k) for k in range(-h, n - h))


def _random(n: int, seed: int, bound: int) -> PointConfig:
    """Rejection-sample grid points from PCG64 until n are in general position.

    Each draw is ``Generator(PCG64(seed)).integers(-bound, bound + 1, size=2)``;
    a candidate is rejected if it repeats a point or is collinear with any
    accepted pair.
    """
    rng = np.random.Generator(np.random.PCG64(seed & 0xFFFF_FFFF_FFFF_FFFF))
    pts: list[Point] = []
    misses = 0
    while len(pts) < n:
        x, y = (int(v) for v in rng.integers(-bound, bound + 1, size=2))
        cand = Point(Fraction(x), Fraction(y))
        if cand in pts or any(
            orient(pts[i], pts[j], cand) == 0 for i in range(len(pts)) for j in range(i + 1, len(pts))
        ):
            misses += 1
            if misses >= MAX_REJECTIONS:
                raise ExhaustedSampling(
                    f"{MAX_REJECTIONS} consecutive rejections; bound {bound} too small for n={n}"
                )
            continue
        misses = 0
        pts.append(cand)
    return PointConfig(pts)


def generate(spec: GeneratorSpec) -> PointConfig:
    if spec.shape == "convex":
        return _convex(spec.n)
    if spec.shape == "star":
        return PointConfig(STAR)
    return _random(spec.n, spec.seed, spec.bound)
