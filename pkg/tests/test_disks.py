import math

import pytest
from hypothesis import given, strategies as st

from twocenter.disks import (CircArc, Seg, disk_contains, disks_intersection,
                             geodesic_circle, one_center)
from twocenter.geom import TAU, Point2, dist
from twocenter.hull import geodesic_hull
from twocenter.instances import generate
from twocenter.oracle import oracle_one_center
from twocenter.polygon import SimplePolygon, triangulate
from twocenter.region import Region

SQRT2 = math.sqrt(2.0)
QSYM = [Point2(1, 1), Point2(1, 3), Point2(3, 3), Point2(3, 1)]


def small_square_region(sq4_tp):
    return Region(sq4_tp, [Point2(1, 1), Point2(1, 3), Point2(3, 3), Point2(3, 1)])


def test_disk_contains(sq4_tp, l6_tp):
    assert disk_contains(sq4_tp, Point2(1, 1), 1.0, Point2(1, 2))
    assert not disk_contains(l6_tp, Point2(3, 1), 2.0, Point2(1, 3))
    assert disk_contains(l6_tp, Point2(3, 1), 3.0, Point2(1, 3))


def test_full_circle(sq4_tp):
    arcs = geodesic_circle(sq4_tp, Point2(2, 2), 1.0)
    assert len(arcs) == 1
    a = arcs[0]
    assert a.anchor == Point2(2, 2) and a.radius == pytest.approx(1.0)
    assert a.span == pytest.approx(TAU)


def test_reflex_anchored_arc(l6_tp):
    arcs = geodesic_circle(l6_tp, Point2(3, 1), 2.0)
    bent = [a for a in arcs if a.anchor == Point2(2, 2)]
    assert bent
    assert bent[0].radius == pytest.approx(2.0 - SQRT2)


def test_clipped_circle_is_one_arc(sq4_tp):
    arcs = geodesic_circle(sq4_tp, Point2(1, 1), 2.0)
    assert len(arcs) == 1
    # circle leaves through x=0 and y=0; the inside arc spans from the
    # hit on one wall to the hit on the other
    a = arcs[0]
    ends = sorted([tuple(a.a), tuple(a.b)])
    assert ends[0][0] == pytest.approx(0.0, abs=1e-9)   # on x=0
    assert ends[1][1] == pytest.approx(0.0, abs=1e-9)   # on y=0


def test_tangent_disks_pinch_to_point(sq4_tp):
    reg = small_square_region(sq4_tp)
    b = disks_intersection(reg, [Point2(1, 1), Point2(1, 3)], 1.0)
    assert b is not None and b.is_point
    assert dist(b.point, Point2(1, 2)) <= 1e-6


def test_lens_two_arcs(sq4_tp):
    reg = small_square_region(sq4_tp)
    b = disks_intersection(reg, [Point2(1, 1), Point2(1, 3)], 1.25)
    assert b is not None and not b.is_point
    arcs = [e for e in b.elements if isinstance(e, CircArc)]
    assert len(arcs) == 2
    assert {tuple(a.owner) for a in arcs} == {(1, 1), (1, 3)}
    # arcs cross at x = 1 + sqrt(1.25^2 - 1) = 1.75, y = 2; the lens is
    # closed on the left by the hull wall x = 1
    ends = {(round(p.x, 6), round(p.y, 6)) for a in arcs for p in (a.a, a.b)}
    assert (1.75, 2.0) in ends
    assert (1.0, 1.75) in ends and (1.0, 2.25) in ends
    segs = [e for e in b.elements if isinstance(e, Seg)]
    assert len(segs) == 1


def test_far_disks_empty(sq4_tp):
    reg = small_square_region(sq4_tp)
    assert disks_intersection(reg, [Point2(1, 1), Point2(3, 3)], 1.0) is None


def test_one_center_single():
    sq = SimplePolygon([Point2(0, 0), Point2(4, 0), Point2(4, 4), Point2(0, 4)])
    res = one_center(triangulate(sq), [Point2(1, 1)])
    assert res.center == Point2(1, 1) and res.radius == 0.0


def test_one_center_bent_pair(l6_tp):
    res = one_center(l6_tp, [Point2(3, 1), Point2(1, 3)])
    assert res.radius == pytest.approx(SQRT2)
    assert dist(res.center, Point2(2, 2)) <= 1e-6


def test_one_center_right_triangle(sq4_tp):
    res = one_center(sq4_tp, [Point2(1, 1), Point2(3, 1), Point2(1, 3)])
    assert res.radius == pytest.approx(SQRT2)
    assert dist(res.center, Point2(2, 2)) <= 1e-6


@given(st.integers(0, 60))
def test_one_center_covers_and_is_tight(seed):
    inst = generate(("star", "comb", "random")[seed % 3], 6 + seed % 9,
                    2 + seed % 7, seed)
    tp = triangulate(SimplePolygon(inst.polygon))
    reg = Region.of(tp)
    res = one_center(tp, inst.points)
    worst = max(reg.distance(res.center, q) for q in inst.points)
    sc = max(1.0, tp.diameter)
    assert worst <= res.radius + 1e-7 * sc
    att = [q for q in inst.points
           if reg.distance(res.center, q) >= res.radius - 1e-6 * sc]
    assert 1 <= len(att)
    assert len(res.determinators) <= 3
    if res.radius > 1e-9 * sc:
        assert len(att) >= 2


@given(st.integers(0, 25))
def test_one_center_matches_grid_oracle(seed):
    inst = generate(("star", "random")[seed % 2], 6 + seed % 7,
                    2 + seed % 5, seed)
    poly = SimplePolygon(inst.polygon)
    res = one_center(triangulate(poly), inst.points)
    _c, r_ref = oracle_one_center(poly, inst.points, n_grid=72, refine=5)
    assert res.radius == pytest.approx(r_ref, rel=1e-4, abs=1e-6)


@given(st.integers(0, 80))
def test_membership_agrees_with_direct_distances(seed):
    inst = generate(("star", "random")[seed % 2], 6 + seed % 7, 4, seed)
    tp = triangulate(SimplePolygon(inst.polygon))
    reg = Region.of(tp)
    sites = inst.points[:2]
    r = 0.35 * tp.diameter
    b = disks_intersection(reg, sites, r)
    if b is None or b.is_point:
        return
    sc = max(1.0, tp.diameter)
    for e in b.elements:
        for t in (0.0, 0.3, 0.7):
            x = e.point(t)
            assert max(reg.distance(x, s) for s in sites) <= r + 1e-6 * sc
            if isinstance(e, CircArc):
                assert reg.distance(x, e.owner) == pytest.approx(r, abs=1e-6 * sc)
