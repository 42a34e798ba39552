from fractions import Fraction

import pytest
from hypothesis import strategies as st

from halving import PointConfig, halving_edges
from halving.exact import Point, general_position_violation

SQUARE = [(0, 0), (2, 0), (2, 2), (0, 2)]
STAR = [(0, 0), (4, 0), (2, 4), (2, 1)]
HEXAGON = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]


def oracle_edges(points):
    """Halving pairs by counting both sides with plain rational arithmetic.

    Written independently of the library: no orient(), no g_balance().
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    n = len(pts)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            (ax, ay), (bx, by) = pts[i], pts[j]
            above = below = 0
            for k, (px, py) in enumerate(pts):
                if k in (i, j):
                    continue
                c = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
                above += c > 0
                below += c < 0
            if above == below:
                edges.append((i, j))
    return edges


def gp_configs(max_n=12, bound=40):
    """Small integer configurations in general position."""
    pts = st.lists(st.tuples(st.integers(-bound, bound), st.integers(-bound, bound)),
                   min_size=2, max_size=max_n, unique=True)
    return (pts.map(lambda p: [Point.of(*q) for q in p[: len(p) - len(p) % 2]])
            .filter(lambda p: general_position_violation(p) is None)
            .map(PointConfig))


@pytest.fixture
def square():
    return PointConfig(SQUARE)


@pytest.fixture
def star():
    return PointConfig(STAR)


@pytest.fixture
def hexagon():
    return PointConfig(HEXAGON)


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # pay the JIT/cache load once so timed criteria measure computation only
    halving_edges(PointConfig(SQUARE))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
