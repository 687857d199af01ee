import math

from hypothesis import given, strategies as st

from twocenter.geom import (TAU, Point2, angle_of, circle_circle_intersections,
                            convex_hull_ccw, cw_delta, dist, orientation,
                            point_at, ring_contains, seg_point_distance,
                            segments_properly_cross)

coords = st.floats(-50, 50, allow_nan=False, allow_infinity=False)


def test_orientation_signs():
    assert orientation(Point2(0, 0), Point2(1, 0), Point2(0, 1)) == 1
    assert orientation(Point2(0, 0), Point2(1, 0), Point2(2, 0)) == 0
    assert orientation(Point2(0, 0), Point2(0, 1), Point2(1, 1)) == -1


@given(coords, coords, coords, coords, coords, coords)
def test_orientation_antisymmetry(ax, ay, bx, by, cx, cy):
    a, b, c = Point2(ax, ay), Point2(bx, by), Point2(cx, cy)
    assert orientation(a, b, c) == -orientation(a, c, b)


def test_cw_delta_basics():
    assert cw_delta(1.0, 1.0) == 0.0
    assert math.isclose(cw_delta(1.0, 0.5), 0.5)
    assert math.isclose(cw_delta(0.5, 1.0), TAU - 0.5)


@given(st.floats(0, TAU), st.floats(0, TAU))
def test_cw_delta_range(a, b):
    d = cw_delta(a, b)
    assert 0.0 <= d < TAU + 1e-12


def test_point_at_roundtrip():
    c = Point2(2, -1)
    for ang in (0.0, 1.0, 3.0, 5.5):
        p = point_at(c, 2.5, ang)
        assert math.isclose(dist(c, p), 2.5)
        assert math.isclose(cw_delta(angle_of(c, p), ang), 0.0, abs_tol=1e-9) \
            or math.isclose(cw_delta(angle_of(c, p), ang), TAU, abs_tol=1e-9)


def test_segment_point_distance():
    a, b = Point2(0, 0), Point2(4, 0)
    assert seg_point_distance(Point2(2, 3), a, b) == 3.0
    assert seg_point_distance(Point2(-3, 4), a, b) == 5.0
    assert seg_point_distance(Point2(1, 0), a, b) == 0.0


def test_proper_crossing():
    assert segments_properly_cross(Point2(0, 0), Point2(2, 2),
                                   Point2(0, 2), Point2(2, 0))
    # shared endpoint is not a proper crossing
    assert not segments_properly_cross(Point2(0, 0), Point2(2, 2),
                                       Point2(2, 2), Point2(3, 0))


def test_circle_circle():
    hits = circle_circle_intersections(Point2(0, 0), 1.0, Point2(1, 0), 1.0)
    assert len(hits) == 2
    for h in hits:
        assert math.isclose(dist(h, Point2(0, 0)), 1.0, abs_tol=1e-12)
        assert math.isclose(dist(h, Point2(1, 0)), 1.0, abs_tol=1e-12)
    assert circle_circle_intersections(Point2(0, 0), 1.0, Point2(5, 0), 1.0) == []


@given(st.lists(st.tuples(coords, coords), min_size=3, max_size=12))
def test_convex_hull_contains_points(raw):
    pts = [Point2(x, y) for x, y in raw]
    hull = convex_hull_ccw(pts)
    assert all(h in pts for h in hull)
    if len(hull) >= 3:
        ring = list(reversed(hull))      # ring_contains expects clockwise
        for p in pts:
            assert ring_contains(p, ring, 1e-7) in ("inside", "boundary")
