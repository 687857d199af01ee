import math

import pytest
from hypothesis import given, strategies as st

from twocenter.geom import Point2, dist, ring_contains
from twocenter.hull import geodesic_hull
from twocenter.instances import generate
from twocenter.polygon import SimplePolygon, triangulate

SQRT2 = math.sqrt(2.0)
QSYM = [Point2(1, 1), Point2(1, 3), Point2(3, 3), Point2(3, 1)]


def _keyset(pts):
    return {(p.x, p.y) for p in pts}


def test_qsym_hull_is_small_square(qsym_hull):
    h = qsym_hull
    assert h.k == 4
    assert _keyset(h.extremes) == _keyset(QSYM)
    assert _keyset(h.ring) == _keyset(QSYM)
    assert h.interior_points == [] and h.boundary_points == []


def test_qsym_hull_clockwise_order(qsym_hull):
    idx = {(p.x, p.y): i for i, p in enumerate(qsym_hull.extremes)}
    # clockwise cyclic order around the small square
    cw = [(1, 1), (1, 3), (3, 3), (3, 1)]
    start = idx[cw[0]]
    k = qsym_hull.k
    assert [idx[c] for c in cw] == [(start + d) % k for d in range(4)]


def test_l6_three_point_hull(l6_tp):
    pts = [Point2(1, 1), Point2(3, 1), Point2(1, 3)]
    h = geodesic_hull(l6_tp, pts)
    assert h.k == 3
    # the (3,1)->(1,3) edge bends at the reflex corner
    assert (2.0, 2.0) in _keyset(h.ring)
    assert len(h.ring) == 4


def test_collinear_hull_degenerates(sq4_tp):
    pts = [Point2(1, 1), Point2(2, 1), Point2(3, 1)]
    h = geodesic_hull(sq4_tp, pts)
    assert _keyset(h.extremes) == {(1, 1), (3, 1)}
    assert h.interior_points == []
    assert _keyset(h.boundary_points) == {(2, 1)}


def test_chain_extremes(qsym_hull):
    h = qsym_hull
    assert h.chain_extremes(0, 1) == [h.extremes[0], h.extremes[1]]
    assert h.chain_extremes(2, 0) == [h.extremes[2], h.extremes[3],
                                      h.extremes[0]]
    assert h.chain_extremes(1, 1) == [h.extremes[1]]


def test_subpolygon_adjacent_is_degenerate(qsym_hull):
    idx = {(p.x, p.y): i for i, p in enumerate(qsym_hull.extremes)}
    a, b = idx[(1, 1)], idx[(1, 3)]
    if (a + 1) % 4 != b:
        a, b = b, a
    sub = qsym_hull.subpolygon(a, b)
    assert sub.degenerate
    assert _keyset(sub.corners) <= {(1, 1), (1, 3)}


def test_subpolygon_diagonal_half(qsym_hull):
    idx = {(p.x, p.y): i for i, p in enumerate(qsym_hull.extremes)}
    sub = qsym_hull.subpolygon(idx[(1, 1)], idx[(3, 3)])
    assert not sub.degenerate
    ks = _keyset(sub.corners)
    assert (1, 1) in ks and (3, 3) in ks and len(ks) == 3


def test_chain_radius_values(qsym_hull):
    idx = {(p.x, p.y): i for i, p in enumerate(qsym_hull.extremes)}
    a, b = idx[(1, 1)], idx[(1, 3)]
    if (a + 1) % 4 != b:
        a, b = b, a
    assert qsym_hull.chain_radius(a, b) == pytest.approx(1.0)
    # three extremes spanning half the square have circumradius sqrt(2)
    c = (b + 1) % 4
    assert qsym_hull.chain_radius(a, c) == pytest.approx(SQRT2)


def test_chain_radius_monotone(arms_hull):
    h = arms_hull
    for i in range(h.k):
        for d in range(1, h.k - 1):
            j = (i + d) % h.k
            jn = (j + 1) % h.k
            assert h.chain_radius(i, j) <= h.chain_radius(i, jn) + 1e-9
            assert h.chain_radius(i, j) >= h.chain_radius((i + 1) % h.k, j) - 1e-9


@given(st.integers(0, 150))
def test_hull_contains_all_points(seed):
    inst = generate(("star", "comb", "random")[seed % 3], 8 + seed % 9,
                    3 + seed % 6, seed)
    tp = triangulate(SimplePolygon(inst.polygon))
    h = geodesic_hull(tp, inst.points)
    sc = max(1.0, tp.diameter)
    assert _keyset(h.extremes) <= _keyset(inst.points)
    if h.k >= 3:
        for q in inst.points:
            assert ring_contains(q, h.ring, 1e-7 * sc) != "outside"
    split = len(h.interior_points) + len(h.boundary_points) + h.k
    assert split == len(_keyset(inst.points))


@given(st.integers(0, 150))
def test_hull_idempotent(seed):
    inst = generate(("star", "random")[seed % 2], 8 + seed % 9,
                    3 + seed % 6, seed)
    tp = triangulate(SimplePolygon(inst.polygon))
    h1 = geodesic_hull(tp, inst.points)
    h2 = geodesic_hull(tp, list(h1.extremes) + list(h1.interior_points)
                       + list(h1.boundary_points))
    assert _keyset(h1.extremes) == _keyset(h2.extremes)
    assert [(p.x, p.y) for p in h1.extremes] == [(p.x, p.y) for p in h2.extremes]


@given(st.integers(0, 150))
def test_hull_geodesically_convex(seed):
    """Paths between member points stay inside the hull ring."""
    inst = generate(("star", "comb", "random")[seed % 3], 8 + seed % 9,
                    4, seed)
    tp = triangulate(SimplePolygon(inst.polygon))
    h = geodesic_hull(tp, inst.points)
    if h.k < 3:
        return
    sc = max(1.0, tp.diameter)
    pts = inst.points
    for a in pts:
        for b in pts:
            for w in h.region.path(a, b):
                assert ring_contains(w, h.ring, 1e-7 * sc) != "outside"
