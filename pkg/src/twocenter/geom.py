"""Planar primitives: points, orientation, segment and circle intersections.

Coordinates are plain floats.  Predicates take an absolute tolerance; the
solver normalizes instances so that an absolute epsilon is meaningful.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Sequence

# Coincidence / boundary tolerance, absolute.  Instances are scaled to a
# bounding-box diameter of roughly 64 before the solver runs.
EPS = 1e-9
# Looser tolerance used when validating that a point of a candidate circle
# really lies at geodesic distance r from its owner.
VAL_TOL = 1e-7

TAU = 2.0 * math.pi


class Point2(NamedTuple):
    x: float
    y: float


def dist(a: Point2, b: Point2) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def cross(o, a, b) -> float:
    """Twice the signed area of triangle (o, a, b)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(a, b, c, eps: float = EPS) -> int:
    """Sign of the turn a->b->c: +1 left, -1 right, 0 straight.

    The float determinant is recomputed exactly (via Fraction) when it falls
    inside its rounding-error bound, so the sign is never wrong; a result of
    0 means the exact value is within eps * scale of zero, where scale is the
    largest coordinate magnitude involved.
    """
    t1 = (b[0] - a[0]) * (c[1] - a[1])
    t2 = (b[1] - a[1]) * (c[0] - a[0])
    det = t1 - t2
    scale = max(abs(a[0]), abs(a[1]), abs(b[0]), abs(b[1]),
                abs(c[0]), abs(c[1]), 1e-30)
    tol = eps * scale
    err = 3.331e-16 * (abs(t1) + abs(t2))
    if abs(det) > max(tol, err):
        return 1 if det > 0.0 else -1
    de = (Fraction(b[0]) - Fraction(a[0])) * (Fraction(c[1]) - Fraction(a[1])) \
        - (Fraction(b[1]) - Fraction(a[1])) * (Fraction(c[0]) - Fraction(a[0]))
    if abs(de) <= tol:
        return 0
    return 1 if de > 0 else -1


def seg_point_distance(p, a, b) -> float:
    """Distance from p to segment ab."""
    ax, ay = a[0], a[1]
    vx, vy = b[0] - ax, b[1] - ay
    L2 = vx * vx + vy * vy
    if L2 <= 0.0:
        return math.hypot(p[0] - ax, p[1] - ay)
    t = ((p[0] - ax) * vx + (p[1] - ay) * vy) / L2
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(p[0] - (ax + t * vx), p[1] - (ay + t * vy))


def on_segment(p, a, b, eps: float = EPS) -> bool:
    return seg_point_distance(p, a, b) <= eps


def segments_properly_cross(a, b, c, d) -> bool:
    """True when the open interiors of ab and cd intersect transversally."""
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def segment_intersection(a, b, c, d):
    """Intersection point of lines ab and cd, or None when parallel."""
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    den = rx * sy - ry * sx
    if den == 0.0:
        return None
    t = ((c[0] - a[0]) * sy - (c[1] - a[1]) * sx) / den
    return Point2(a[0] + t * rx, a[1] + t * ry)


def ray_segment_hit(o, d, a, b, t_min: float = EPS):
    """First hit of ray o + t*d (t >= t_min) with segment ab.

    Returns (t, point) or None.  d need not be unit length; t is measured in
    multiples of |d|.
    """
    rx, ry = d[0], d[1]
    sx, sy = b[0] - a[0], b[1] - a[1]
    den = rx * sy - ry * sx
    if den == 0.0:
        return None
    t = ((a[0] - o[0]) * sy - (a[1] - o[1]) * sx) / den
    if t < t_min:
        return None
    px, py = o[0] + t * rx, o[1] + t * ry
    seg_len2 = sx * sx + sy * sy
    if seg_len2 <= 0.0:
        return None
    u = ((px - a[0]) * sx + (py - a[1]) * sy) / seg_len2
    if u < -1e-12 or u > 1.0 + 1e-12:
        return None
    return t, Point2(px, py)


def circle_circle_intersections(c0, r0, c1, r1, tol: float = EPS):
    """Intersection points of two circles; tangencies collapse to one point."""
    dx, dy = c1[0] - c0[0], c1[1] - c0[1]
    d = math.hypot(dx, dy)
    if d <= tol and abs(r0 - r1) <= tol:
        return []          # same circle, caller must treat specially
    if d > r0 + r1 + tol or d < abs(r0 - r1) - tol or d == 0.0:
        return []
    a = (d * d + r0 * r0 - r1 * r1) / (2.0 * d)
    h2 = r0 * r0 - a * a
    ux, uy = dx / d, dy / d
    mx, my = c0[0] + a * ux, c0[1] + a * uy
    if h2 <= (tol * max(r0, r1, 1.0)) ** 0.5 * tol:
        # grazing contact
        if h2 < 0.0:
            h2 = 0.0
        h = math.sqrt(h2)
        if h <= tol:
            return [Point2(mx, my)]
    if h2 < 0.0:
        return []
    h = math.sqrt(h2)
    return [Point2(mx - h * uy, my + h * ux), Point2(mx + h * uy, my - h * ux)]


def circle_segment_intersections(c, r, a, b, tol: float = EPS):
    """Points where circle (c, r) meets segment ab (inclusive endpoints)."""
    ax, ay = a[0] - c[0], a[1] - c[1]
    vx, vy = b[0] - a[0], b[1] - a[1]
    A = vx * vx + vy * vy
    if A <= 0.0:
        return []
    B = 2.0 * (ax * vx + ay * vy)
    C = ax * ax + ay * ay - r * r
    disc = B * B - 4.0 * A * C
    scale = max(abs(B), abs(C), A, 1.0)
    if disc < -tol * scale:
        return []
    if disc < 0.0:
        disc = 0.0
    sq = math.sqrt(disc)
    out = []
    for t in ((-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)):
        if -1e-12 <= t <= 1.0 + 1e-12:
            p = Point2(a[0] + t * vx, a[1] + t * vy)
            if not out or dist(out[-1], p) > tol:
                out.append(p)
    return out


def angle_of(c, p) -> float:
    return math.atan2(p[1] - c[1], p[0] - c[0])


def point_at(c, r: float, ang: float) -> Point2:
    return Point2(c[0] + r * math.cos(ang), c[1] + r * math.sin(ang))


def cw_delta(frm: float, to: float) -> float:
    """Angle swept going clockwise from angle frm to angle to, in [0, tau)."""
    return (frm - to) % TAU


def polyline_length(pts: Sequence[Point2]) -> float:
    return sum(dist(pts[i], pts[i + 1]) for i in range(len(pts) - 1))


def convex_hull_ccw(points):
    """Strict convex hull in counterclockwise order (collinear points dropped)."""
    P = sorted(set((p[0], p[1]) for p in points))
    if len(P) == 1:
        return [Point2(*P[0])]
    if len(P) == 2:
        return [Point2(*P[0]), Point2(*P[1])]

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(P)
    upper = half(reversed(P))
    return [Point2(*p) for p in lower[:-1] + upper[:-1]]


def ring_contains(pt, ring, eps: float = EPS) -> str:
    """Classify pt against a closed (possibly weakly simple) ring.

    Returns 'boundary' when pt is within eps of the ring polyline, else
    'inside'/'outside' by crossing parity.  Doubled edges cancel in parity,
    which matches the zero-area regions they bound.
    """
    n = len(ring)
    for i in range(n):
        if seg_point_distance(pt, ring[i], ring[(i + 1) % n]) <= eps:
            return "boundary"
    x, y = pt[0], pt[1]
    inside = False
    for i in range(n):
        a = ring[i]
        b = ring[(i + 1) % n]
        if (a[1] > y) != (b[1] > y):
            xi = a[0] + (y - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if x < xi:
                inside = not inside
    return "inside" if inside else "outside"


def bbox(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def bbox_diameter(points) -> float:
    x0, y0, x1, y1 = bbox(points)
    return math.hypot(x1 - x0, y1 - y0)
