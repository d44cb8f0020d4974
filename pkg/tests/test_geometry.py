import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nacset import _kernels
from nacset.generator import generate
from nacset.geometry import (COORD_LIMIT, DegenerateHull, DegenerateTriangle, DuplicatePoints,
                             LayerSizeMismatch, Orientation, as_point_array, convex_hull,
                             convex_layers, cross, lex_sort, orientation,
                             point_in_triangle_strict)
from nacset.oracle import hull_boundary, onion_layers

coord = st.integers(-10**6, 10**6)
point = st.tuples(coord, coord)
HEXAGON = [(0, 0), (2, 0), (3, 2), (2, 4), (0, 4), (-1, 2)]
K2 = [(6, 50), (50, 6), (1, 59), (10, 41), (41, 10), (59, 1)]


def test_orientation_examples():
    assert orientation((0, 0), (1, 0), (0, 1)) is Orientation.COUNTERCLOCKWISE
    assert orientation((0, 0), (2, 2), (1, 1)) is Orientation.COLLINEAR
    assert cross((6, 50), (1, 59), (10, 41)) == 9
    assert orientation((6, 50), (1, 59), (10, 41)) is Orientation.COUNTERCLOCKWISE


@given(point, point, point)
def test_orientation_permutations(a, b, c):
    o = orientation(a, b, c)
    assert orientation(b, a, c) is o.reversed()
    assert orientation(b, c, a) is o
    assert orientation(c, b, a) is o.reversed()


def test_orientation_near_the_coordinate_bound():
    m = COORD_LIMIT - 1
    assert orientation((-m, -m), (m, m), (m - 1, m)) is Orientation.COUNTERCLOCKWISE
    assert orientation((-m, -m), (m, m), (0, 0)) is Orientation.COLLINEAR
    assert orientation((-m, -m), (m, m), (m, m - 1)) is Orientation.CLOCKWISE


def test_point_in_triangle_examples():
    tri = [(0, 0), (3, 0), (0, 3)]
    assert point_in_triangle_strict((1, 1), *tri)
    assert not point_in_triangle_strict((0, 0), *tri)
    assert not point_in_triangle_strict((1, 0), *tri)
    assert point_in_triangle_strict((6, 50), (1, 59), (10, 41), (41, 10))
    # either winding
    assert point_in_triangle_strict((1, 1), (0, 3), (3, 0), (0, 0))
    with pytest.raises(DegenerateTriangle):
        point_in_triangle_strict((1, 1), (0, 0), (1, 0), (2, 0))


def test_point_array_validation():
    assert as_point_array([]).shape == (0, 2)
    with pytest.raises(ValueError):
        as_point_array([(COORD_LIMIT, 0)])
    with pytest.raises((TypeError, ValueError)):
        as_point_array([(0.5, 1)])
    with pytest.raises(DuplicatePoints):
        lex_sort(as_point_array([(1, 2), (3, 4), (1, 2)]))


def test_convex_hull_examples():
    h = convex_hull([(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])
    assert h.vertices == [(0, 0), (4, 0), (4, 4), (0, 4)] and not h.degenerate
    h = convex_hull([(0, 0), (2, 0), (1, 0)])
    assert h.vertices == [(0, 0), (2, 0)] and h.degenerate
    h = convex_hull(K2)
    assert h.vertices == [(1, 59), (10, 41), (41, 10), (59, 1)]


def test_convex_layers_examples():
    assert convex_layers(K2).sizes == [2, 4]
    assert convex_layers(K2).as_tuples() == [[(6, 50), (50, 6)],
                                             [(1, 59), (10, 41), (41, 10), (59, 1)]]
    assert convex_layers(HEXAGON).sizes == [6]
    assert convex_layers([(7, 7)]).sizes == [1]
    assert convex_layers(generate(14).points).sizes == [2, 4, 8]
    assert convex_layers(generate(10).points).sizes == [1, 3, 6]


def test_layer_size_mismatch_aborts_at_the_outer_layer():
    with pytest.raises(LayerSizeMismatch) as e:
        convex_layers(HEXAGON, expected_sizes=[4, 2])
    assert (e.value.layer, e.value.observed, e.value.expected) == (0, 6, 4)


def test_collinear_hull_points_are_reported():
    with pytest.raises(DegenerateHull) as e:
        convex_layers([(0, 0), (4, 0), (2, 0), (2, 5), (2, 1)])
    a, b, c = e.value.triple
    assert cross(a, b, c) == 0


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.integers(-30, 30), st.integers(-30, 30)), min_size=1,
                max_size=40, unique=True))
def test_layers_agree_with_gift_wrapping(pts):
    slow = onion_layers(pts)
    try:
        fast = convex_layers(pts).as_tuples()
    except DegenerateHull as e:
        assert cross(*e.triple) == 0 and set(e.triple) <= set(pts)
        # the slow peel then shows a boundary point that is not a vertex
        assert any(len(layer) >= 3 and any(
            cross(layer[i - 1], layer[i], layer[(i + 1) % len(layer)]) == 0
            for i in range(len(layer))) for layer in slow)
        return
    assert fast == slow


@settings(max_examples=200, deadline=None)
@given(st.lists(point, min_size=3, max_size=60, unique=True))
def test_hull_matches_gift_wrapping_in_general_position(pts):
    h = convex_hull(pts)
    boundary = hull_boundary(pts)
    if not h.degenerate:
        assert h.vertices == boundary
    else:
        assert len(boundary) > len(h.vertices) or len(h.vertices) == 2


def _exact_sign(a, b, c, d):
    v = a * b - c * d
    return (v > 0) - (v < 0)


def test_det_sign_matches_python_integers():
    rng = random.Random(5)
    hi = 1 << 63
    edges = [0, 1, -1, (1 << 31) - 1, 1 << 31, (1 << 62) - 1, -(1 << 62) + 1, hi - 1, -hi + 1]
    for _ in range(20000):
        vals = [rng.choice(edges) if rng.random() < 0.3 else rng.randint(-hi + 1, hi - 1)
                for _ in range(4)]
        if rng.random() < 0.2:
            vals[2], vals[3] = vals[1], vals[0]
        assert _kernels.det_sign(*vals) == _exact_sign(*vals)


@given(st.integers(-(1 << 62) + 1, (1 << 62) - 1), st.integers(-(1 << 62) + 1, (1 << 62) - 1),
       st.integers(-(1 << 62) + 1, (1 << 62) - 1), st.integers(-(1 << 62) + 1, (1 << 62) - 1),
       st.integers(-(1 << 62) + 1, (1 << 62) - 1), st.integers(-(1 << 62) + 1, (1 << 62) - 1))
def test_orient_kernel_matches_cross(ax, ay, bx, by, cx, cy):
    c = cross((ax, ay), (bx, by), (cx, cy))
    assert _kernels.orient(ax, ay, bx, by, cx, cy) == (c > 0) - (c < 0)


def test_layers_of_large_generated_sets_are_the_levels():
    d = generate(2046)
    layers = convex_layers(d.points)
    assert layers == d.labeling.layers
    assert layers.sizes == [2 ** j for j in range(1, 11)]


def test_lex_sort_orders_rows():
    a = as_point_array([(3, 1), (1, 5), (1, 2), (-4, 9)])
    assert lex_sort(a).tolist() == [[-4, 9], [1, 2], [1, 5], [3, 1]]
    assert isinstance(lex_sort(a), np.ndarray)
