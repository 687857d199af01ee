"""Geodesic convex hulls of point sets inside a polygon.

The hull of Q is traced as a closed (weakly simple) ring: extreme points
of Q in clockwise order joined by geodesic paths.  Chains, subregions
between two boundary points, and their one-center radii live here too.
"""
from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .disks import OneCenterResult, one_center
from .errors import HullConvergenceError, PointOutsidePolygon
from .geom import Point2, convex_hull_ccw, dist, ring_contains
from .polygon import TriangulatedPolygon, point_in_polygon
from .region import Region


class ChainRegion(Region):
    """Region bounded by a hull boundary portion and a closing geodesic.

    `degenerate` marks zero-area regions (a doubled path or a single
    point); they still carry corners usable for radius queries.
    """

    def __init__(self, tp: TriangulatedPolygon, ring, degenerate: bool):
        super().__init__(tp, ring)
        self.degenerate = degenerate


def _ring_area2(ring) -> float:
    s = 0.0
    n = len(ring)
    for i in range(n):
        a, b = ring[i], ring[(i + 1) % n]
        s += a[0] * b[1] - b[0] * a[1]
    return s


class GeodesicHull:
    """Extreme cycle v_1..v_k (clockwise) with its traced boundary."""

    def __init__(self, tp: TriangulatedPolygon, extremes: List[Point2],
                 all_points: List[Point2]):
        self.ambient = tp
        self.region = Region.of(tp)
        self.extremes = extremes
        self.k = len(extremes)
        self.paths: List[List[Point2]] = []
        ring: List[Point2] = []
        self.pos: List[int] = []
        if self.k == 1:
            ring = [extremes[0]]
            self.pos = [0]
        else:
            for i in range(self.k):
                p = self.region.path(extremes[i], extremes[(i + 1) % self.k])
                self.paths.append(p)
                self.pos.append(len(ring))
                ring.extend(p[:-1])
        self.ring: Tuple[Point2, ...] = tuple(ring)
        self.hull_region = Region(tp, self.ring)
        sc = max(1.0, tp.diameter)
        ex_keys = {(p.x, p.y) for p in extremes}
        self.interior_points: List[Point2] = []
        self.boundary_points: List[Point2] = []
        for q in all_points:
            if (q.x, q.y) in ex_keys:
                continue
            side = ring_contains(q, self.ring, 1e-9 * sc)
            if side == "inside":
                self.interior_points.append(q)
            else:
                # construction guarantees not outside; anything else is on
                self.boundary_points.append(q)
        self._radius_cache: Dict[Tuple[int, int], float] = {}
        self._hull_center: Optional[OneCenterResult] = None

    def extreme(self, i: int) -> Point2:
        return self.extremes[i % self.k]

    def chain_extremes(self, a: int, b: int) -> List[Point2]:
        """v_a, v_{a+1}, ..., v_b clockwise, inclusive."""
        a %= self.k
        b %= self.k
        out = [self.extremes[a]]
        i = a
        while i != b:
            i = (i + 1) % self.k
            out.append(self.extremes[i])
        return out

    def boundary_portion(self, a: int, b: int) -> List[Point2]:
        """Ring points clockwise from v_a to v_b, inclusive."""
        a %= self.k
        b %= self.k
        i = self.pos[a]
        j = self.pos[b]
        n = len(self.ring)
        out = [self.ring[i]]
        while i != j:
            i = (i + 1) % n
            out.append(self.ring[i])
        return out

    def subpolygon(self, a: int, b: int) -> ChainRegion:
        """Region between the clockwise boundary portion v_a -> v_b and
        the geodesic from v_b back to v_a."""
        a %= self.k
        b %= self.k
        if a == b:
            return ChainRegion(self.ambient, [self.extremes[a]], True)
        portion = self.boundary_portion(a, b)
        closing = self.region.path(self.extremes[b], self.extremes[a])
        ring = portion + closing[1:-1]
        sc = max(1.0, self.ambient.diameter)
        degen = abs(_ring_area2(ring)) <= 1e-9 * sc * sc
        return ChainRegion(self.ambient, ring, degen)

    def chain_radius(self, a: int, b: int) -> float:
        """One-center radius of the subregion between v_a and v_b."""
        a %= self.k
        b %= self.k
        key = (a, b)
        hit = self._radius_cache.get(key)
        if hit is not None:
            return hit
        if a == b:
            r = 0.0
        else:
            sub = self.subpolygon(a, b)
            r = one_center(self.region, sub.corners).radius
        self._radius_cache[key] = r
        return r

    def hull_center(self) -> OneCenterResult:
        """Smallest disk covering the whole hull (its corners suffice)."""
        if self._hull_center is None:
            self._hull_center = one_center(self.region, self.hull_region.corners)
        return self._hull_center

    def __repr__(self):
        return f"GeodesicHull(k={self.k}, interior={len(self.interior_points)})"


def _trace_ring(region: Region, extremes: List[Point2]) -> List[Point2]:
    if len(extremes) == 1:
        return [extremes[0]]
    ring: List[Point2] = []
    k = len(extremes)
    for i in range(k):
        ring.extend(region.path(extremes[i], extremes[(i + 1) % k])[:-1])
    return ring


def geodesic_hull(tp: TriangulatedPolygon, Q: Sequence[Point2]) -> GeodesicHull:
    """Geodesic convex hull of Q inside the polygon.

    Starts from the Euclidean hull order, joins consecutive extremes by
    geodesics, then alternates inserting points left outside the traced
    ring (at the position of least perimeter increase) and dropping
    extremes engulfed by the rest, until stable.
    """
    region = Region.of(tp)
    pts: List[Point2] = []
    seen = set()
    for q in Q:
        p = Point2(float(q[0]), float(q[1]))
        if point_in_polygon(tp.polygon, p) == "outside":
            raise PointOutsidePolygon(f"{p} outside the polygon")
        if (p.x, p.y) not in seen:
            seen.add((p.x, p.y))
            pts.append(p)
    if not pts:
        raise ValueError("no points")
    if len(pts) == 1:
        return GeodesicHull(tp, [pts[0]], pts)

    hull_ccw = convex_hull_ccw(pts)
    extremes: List[Point2] = list(reversed(hull_ccw))
    sc = max(1.0, tp.diameter)
    eps = 1e-9 * sc

    guard = 0
    limit = 4 * len(pts) * len(pts) + 16
    while True:
        guard += 1
        if guard > limit:
            raise HullConvergenceError("hull construction did not stabilize")
        ring = _trace_ring(region, extremes)
        ex_keys = {(p.x, p.y) for p in extremes}
        outside = [q for q in pts if (q.x, q.y) not in ex_keys
                   and ring_contains(q, ring, eps) == "outside"]
        if outside:
            # bring in the worst offender at the cheapest boundary slot
            def slack(q):
                best = None
                for i in range(len(extremes)):
                    a = extremes[i]
                    b = extremes[(i + 1) % len(extremes)]
                    inc = region.distance(a, q) + region.distance(q, b) \
                        - region.distance(a, b)
                    if best is None or inc < best[0]:
                        best = (inc, i)
                return best
            q = max(outside, key=lambda q: slack(q)[0])
            _, slot = slack(q)
            extremes.insert(slot + 1, q)
            continue
        if len(extremes) > 2:
            removed = False
            for i in range(len(extremes)):
                rest = extremes[:i] + extremes[i + 1:]
                rring = _trace_ring(region, rest)
                if ring_contains(extremes[i], rring, eps) != "outside":
                    extremes.pop(i)
                    removed = True
                    break
            if removed:
                continue
        break

    ring = _trace_ring(region, extremes)
    if _ring_area2(ring) > 0:
        extremes.reverse()
    start = min(range(len(extremes)), key=lambda i: (extremes[i].x, extremes[i].y))
    extremes = extremes[start:] + extremes[:start]
    return GeodesicHull(tp, extremes, pts)
