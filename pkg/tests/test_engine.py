from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from halving.engine import (
    Geograph, choose_direction, components, halves, halving_edges,
    halving_edges_bruteforce, is_halving_pair, left_degree, orient_geograph, right_degree,
    slope_sequence,
)
from halving.errors import IndexOutOfRange
from halving.exact import PointConfig, affine_apply

from conftest import gp_configs, oracle_edges


def test_is_halving_pair_examples(square, star):
    assert is_halving_pair(square, 0, 2)
    assert not is_halving_pair(square, 0, 1)
    # line (0,0)->(2,1): (4,0) has cross -4 (East), (2,4) has cross 6 (West)
    assert is_halving_pair(star, 0, 3)
    with pytest.raises(IndexOutOfRange):
        is_halving_pair(square, 0, 4)


def test_four_point_examples(square, star):
    assert halving_edges(square).edges == ((0, 2), (1, 3))
    assert halving_edges(star).edges == ((0, 3), (1, 3), (2, 3))


def test_hexagon_long_diagonals(hexagon):
    g = halving_edges(hexagon)
    assert g.edges == ((0, 3), (1, 4), (2, 5))
    assert g.degrees() == [1] * 6


def test_components_examples(square, star):
    assert components(halving_edges(square)).classes == ((0, 2), (1, 3))
    assert components(halving_edges(star)).classes == ((0, 1, 2, 3),)
    assert components(Geograph(PointConfig([(0, 0), (1, 0)]), ())).classes == ((0,), (1,))


def test_geograph_canonicalises_edges(square):
    g = Geograph(square, ((2, 0), (3, 1), (0, 2)))
    assert g.edges == ((0, 2), (1, 3))
    with pytest.raises(ValueError):
        Geograph(square, ((1, 1),))
    with pytest.raises(IndexOutOfRange):
        Geograph(square, ((1, 4),))


def test_slope_sequence_prefix():
    got = [str(t) for _, t in zip(range(11), slope_sequence())]
    assert got == ["0", "1", "-1", "1/2", "-1/2", "1/3", "-1/3", "2/3", "-2/3", "1/4", "-1/4"]


def test_choose_direction_square(square):
    # projections x + t*y: t=0 -> 0,2,2,0; t=1 -> 0,2,4,2; t=-1 -> 0,2,0,-2; t=1/2 -> 0,2,3,1
    for t, proj in [(0, [0, 2, 2, 0]), (1, [0, 2, 4, 2]), (-1, [0, 2, 0, -2]), (Fraction(1, 2), [0, 2, 3, 1])]:
        assert [p.x + t * p.y for p in square] == proj
    assert choose_direction(halving_edges(square)).t == Fraction(1, 2)


def test_choose_direction_trivial_cases():
    assert choose_direction(halving_edges(PointConfig([(0, 0), (1, 0)]))).t == 0
    assert choose_direction(halving_edges(PointConfig([(0, 0), (1, 5), (2, 1), (3, 3)]))).t == 0


def test_degrees_and_halves_star(star):
    og = orient_geograph(halving_edges(star), Fraction(1, 8))
    assert [og.projection(v) for v in range(4)] == [0, 4, Fraction(5, 2), Fraction(17, 8)]
    assert (left_degree(og, 3), right_degree(og, 3)) == (1, 2)
    assert halves(og) == ({0, 3}, {1, 2})
    with pytest.raises(IndexOutOfRange):
        left_degree(og, 9)


def test_degrees_and_halves_square(square):
    og = orient_geograph(halving_edges(square), Fraction(1, 2))
    assert (left_degree(og, 0), right_degree(og, 0)) == (0, 1)
    assert halves(og) == ({0, 3}, {1, 2})


def test_single_edge_halves():
    og = orient_geograph(halving_edges(PointConfig([(0, 0), (1, 0)])))
    assert halves(og) == ({0}, {1})
    assert left_degree(og, 1) + right_degree(og, 1) == 1


def test_non_generic_direction_rejected(square):
    with pytest.raises(ValueError):
        orient_geograph(halving_edges(square), 0)


@settings(max_examples=80, deadline=None)
@given(gp_configs())
def test_engine_properties(c):
    g = halving_edges(c)
    assert list(g.edges) == oracle_edges([(p.x, p.y) for p in c])
    assert g.edges == halving_edges_bruteforce(c).edges
    assert len(g.edges) >= c.n // 2
    og = orient_geograph(g)
    left, _ = halves(og)
    for v, d in enumerate(g.degrees()):
        ld, rd = left_degree(og, v), right_degree(og, v)
        assert d % 2 == 1 and d == 2 * min(ld, rd) + 1
        assert rd == ld + 1 if v in left else ld == rd + 1
    # components do not depend on orientation; orientation is only a view
    assert components(g) == components(Geograph(c, g.edges))


@settings(max_examples=40, deadline=None)
@given(gp_configs(max_n=10), st.integers(1, 4), st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 4))
def test_positive_affine_maps_keep_edges(c, a, b, cc, d):
    if a * d - b * cc <= 0:
        return
    assert halving_edges(affine_apply(((a, b), (cc, d)), (1, -2), c)).edges == halving_edges(c).edges
