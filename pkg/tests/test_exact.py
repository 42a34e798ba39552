from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from halving.errors import CollinearTriple, DuplicatePoints, OddSize, SingularTransform
from halving.exact import (
    DirectedLine, Point, PointConfig, Side, affine_apply, g_balance, orient, side_of,
)
from halving.engine import halving_edges

from conftest import SQUARE, oracle_edges

P = Point.of


@pytest.mark.parametrize("p, q, r, expected", [
    ((0, 0), (1, 0), (0, 1), 1),
    ((0, 0), (1, 0), (2, 0), 0),
    ((0, 0), (0, 1), (1, 0), -1),
])
def test_orient_examples(p, q, r, expected):
    assert orient(P(*p), P(*q), P(*r)) == expected


@pytest.mark.parametrize("tip, p, expected", [
    ((2, 0), (1, 1), Side.WEST),
    ((2, 0), (1, -1), Side.EAST),
    ((2, 2), (1, 1), Side.ON),
])
def test_side_of_examples(tip, p, expected):
    assert side_of(DirectedLine.through(P(0, 0), P(*tip)), P(*p)) is expected


def test_g_balance_examples():
    sq = [P(*p) for p in SQUARE]
    assert g_balance(sq, DirectedLine(P(0, 0), P(2, 2))) == 0
    assert g_balance(sq, DirectedLine(P(0, 0), P(2, 0))) == 2


def test_scalars_are_canonical():
    p = P("4/6", "0/5")
    assert (p.x.numerator, p.x.denominator) == (2, 3)
    assert (p.y.numerator, p.y.denominator) == (0, 1)
    with pytest.raises(TypeError):
        P(0.5, 1)


def test_directed_line_rejects_coincident_points():
    with pytest.raises(ValueError):
        DirectedLine.through(P(1, 1), P(1, 1))


def test_config_validation():
    with pytest.raises(OddSize):
        PointConfig([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(DuplicatePoints) as exc:
        PointConfig([(0, 0), (1, 0), (0, 1), (1, 0)])
    assert exc.value.indices == (1, 3)
    with pytest.raises(CollinearTriple) as exc:
        PointConfig([(0, 0), (5, 1), (1, 1), (2, 2)])
    assert exc.value.indices == (0, 2, 3)


def test_affine_identity_and_squeeze():
    sq = PointConfig(SQUARE)
    assert affine_apply(((1, 0), (0, 1)), (0, 0), sq) == sq
    squeezed = affine_apply(((1, 0), (0, Fraction(1, 4))), (0, 0), sq)
    assert squeezed == PointConfig([(0, 0), (2, 0), (2, "1/2"), (0, "1/2")])
    with pytest.raises(SingularTransform):
        affine_apply(((1, 2), (2, 4)), (0, 0), sq)


coord = st.integers(-60, 60)
point = st.tuples(coord, coord).map(lambda t: P(*t))
small = st.integers(-5, 5)


@given(point, point, point)
def test_orient_antisymmetric(p, q, r):
    assert orient(p, q, r) == -orient(p, r, q)


@given(point, point, point, point)
def test_orient_translation_invariant(p, q, r, t):
    shift = lambda a: Point(a.x + t.x, a.y + t.y)
    assert orient(shift(p), shift(q), shift(r)) == orient(p, q, r)


@given(point, point, point)
def test_reversing_line_swaps_sides(a, b, p):
    if a == b:
        return
    line = DirectedLine(a, b)
    assert side_of(line.reversed(), p) == Side(-side_of(line, p))


@given(st.lists(point, max_size=12), point, point)
def test_balance_negates_under_reversal(pts, a, b):
    if a == b:
        return
    line = DirectedLine(a, b)
    assert g_balance(pts, line) + g_balance(pts, line.reversed()) == 0


@given(point, point, point, small, small, small, small)
def test_affine_sign_rule(p, q, r, a, b, c, d):
    det = a * d - b * c
    if det == 0:
        return
    m = lambda s: Point(a * s.x + b * s.y, c * s.x + d * s.y)
    expected = orient(p, q, r) * (1 if det > 0 else -1)
    assert orient(m(p), m(q), m(r)) == expected


def test_invertible_map_preserves_halving_edges():
    cfg = PointConfig([(0, 0), (7, 2), (3, 5), (-2, 4), (1, -3), (5, 3)])
    before = oracle_edges([(p.x, p.y) for p in cfg])
    for m in (((2, 1), (1, 3)), ((0, 1), (1, 0)), ((-1, 0), (0, 1)), ((1, 5), (0, "1/9"))):
        mapped = affine_apply(m, (3, -7), cfg)
        # the edge set is a property of the point set, so even reflections keep it
        assert oracle_edges([(p.x, p.y) for p in mapped]) == before
        assert list(halving_edges(mapped).edges) == before
