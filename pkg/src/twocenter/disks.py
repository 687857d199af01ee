"""Geodesic disks, intersections of equal-radius families, and one-centers.

A geodesic disk's boundary is made of Euclidean circular arcs, each centered
at the last vertex of the shortest path from the site (its anchor), plus
pieces of the region boundary.  All closed boundaries here are clockwise
cycles with the interior on the right; arcs are traversed clockwise around
their anchors (decreasing angle).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import BoundaryAssemblyError, NoArcs
from .geom import (EPS, TAU, VAL_TOL, Point2, angle_of, circle_circle_intersections,
                   circle_segment_intersections, cross, cw_delta, dist, point_at,
                   polyline_length)
from .polygon import TriangulatedPolygon
from .region import Region


@dataclass(frozen=True)
class CircArc:
    """Clockwise arc around `anchor`; the owner's geodesic circle piece."""
    anchor: Point2
    radius: float          # Euclidean radius = r - d(owner, anchor)
    start: float           # angle of the clockwise start point
    span: float            # clockwise angular extent in [0, tau]
    owner: Point2
    anchor_dist: float     # geodesic distance owner -> anchor

    def point(self, t: float) -> Point2:
        return point_at(self.anchor, self.radius, self.start - self.span * t)

    @property
    def a(self) -> Point2:
        return self.point(0.0)

    @property
    def b(self) -> Point2:
        return self.point(1.0)

    def length(self) -> float:
        return self.radius * self.span

    def angle_param(self, theta: float) -> float:
        if self.span <= 0:
            return 0.0
        return cw_delta(self.start, theta) / self.span

    def contains_angle(self, theta: float, tol: float = 1e-9) -> bool:
        d = cw_delta(self.start, theta)
        return d <= self.span + tol or d >= TAU - tol

    def sub(self, t0: float, t1: float) -> "CircArc":
        s = self.start - self.span * t0
        return CircArc(self.anchor, self.radius, s % TAU,
                       self.span * (t1 - t0), self.owner, self.anchor_dist)


@dataclass(frozen=True)
class Seg:
    """Straight boundary piece, directed."""
    a: Point2
    b: Point2

    def point(self, t: float) -> Point2:
        return Point2(self.a.x + (self.b.x - self.a.x) * t,
                      self.a.y + (self.b.y - self.a.y) * t)

    def length(self) -> float:
        return dist(self.a, self.b)

    def sub(self, t0: float, t1: float) -> "Seg":
        return Seg(self.point(t0), self.point(t1))


Element = Union[CircArc, Seg]


@dataclass
class ArcBoundary:
    """Closed clockwise boundary of an intersection of geodesic disks.

    A tangency that pinches the region to a single point is kept as an
    empty element list with `point` set.
    """
    elements: List[Element]
    radius: float
    sites: Tuple[Point2, ...]
    point: Optional[Point2] = None

    @property
    def is_point(self) -> bool:
        return self.point is not None

    def arcs(self) -> List[Tuple[int, CircArc]]:
        return [(i, e) for i, e in enumerate(self.elements)
                if isinstance(e, CircArc)]

    def total_length(self) -> float:
        return sum(e.length() for e in self.elements)

    def cum_lengths(self) -> List[float]:
        out = [0.0]
        for e in self.elements:
            out.append(out[-1] + e.length())
        return out

    def param_at(self, elem_idx: int, t: float) -> float:
        cum = self.cum_lengths()
        return cum[elem_idx] + self.elements[elem_idx].length() * t

    def samples(self, per_elem: int = 8) -> List[Point2]:
        out = []
        for e in self.elements:
            for k in range(per_elem):
                out.append(e.point(k / per_elem))
        if self.point is not None:
            out.append(self.point)
        return out


@dataclass(frozen=True)
class Event:
    """Boundary-crossing marker of one interior point's disk on the arcs."""
    position: Point2
    owner: Point2
    flag: str              # "in" | "out"
    param: float           # clockwise length from the reference point
    elem_index: int


@dataclass(frozen=True)
class OneCenterResult:
    center: Point2
    radius: float
    determinators: Tuple[Point2, ...]


def _scale(region: Region) -> float:
    return max(1.0, region.diameter)


def _ring_area2(ring) -> float:
    s = 0.0
    n = len(ring)
    for i in range(n):
        a, b = ring[i], ring[(i + 1) % n]
        s += a[0] * b[1] - b[0] * a[1]
    return s


def ring_elements_cw(ring) -> List[Element]:
    """The ring as directed Segs, reoriented clockwise if it has area."""
    pts = list(ring)
    if _ring_area2(pts) > 0:
        pts = list(reversed(pts))
    out: List[Element] = []
    n = len(pts)
    for i in range(n):
        a, b = Point2(*pts[i]), Point2(*pts[(i + 1) % n])
        if dist(a, b) > 1e-12:
            out.append(Seg(a, b))
    return out


# -- anchor charts of one site ----------------------------------------

def _charts(region: Region, q: Point2, r: float):
    """Anchors of q's geodesic circle at radius r with their Euclidean
    radii, plus the straight extension segments bounding each anchor's
    validity cell."""
    q = Point2(q[0], q[1])
    charts: List[Tuple[Point2, float, float]] = [(q, 0.0, r)]
    ext_segs: List[Tuple[Point2, Point2]] = []
    tree = region.tree(q)
    for w in region.corners:
        dqw = tree.distance_to(w)
        R = r - dqw
        if R <= 1e-12:
            continue
        if dist(w, q) <= 1e-12:
            continue
        charts.append((w, dqw, R))
        pred = tree.parent_of(w)
        if pred is None:
            pred = q
        dvec = Point2(w.x - pred.x, w.y - pred.y)
        if region._ray_enters(w, dvec):
            h = region.ray_to_boundary(w, dvec)
            if h is not None:
                ext_segs.append((w, h))
    return charts, ext_segs


class _DistFn:
    """Geodesic distance from a fixed site with cheap Euclidean bounds."""

    def __init__(self, region: Region, q: Point2, charts):
        self.region = region
        self.q = Point2(q[0], q[1])
        self.anchors = [(c, dc) for (c, dc, _R) in charts]

    def lower(self, x) -> float:
        return math.hypot(x[0] - self.q.x, x[1] - self.q.y)

    def __call__(self, x) -> float:
        return self.region.distance(self.q, x)

    def within(self, x, r: float, tol: float) -> bool:
        # Euclidean distance is a valid lower bound; anything farther than
        # r straight-line is farther geodesically
        if self.lower(x) > r + tol:
            return False
        return self(x) <= r + tol


# -- element cutting ---------------------------------------------------

def _cut_points_on_elem(elem: Element, charts) -> List[float]:
    """Params in (0,1) where any chart circle meets the element."""
    ts: List[float] = []
    if isinstance(elem, Seg):
        for (c, _dc, R) in charts:
            for p in circle_segment_intersections(c, R, elem.a, elem.b):
                L = elem.length()
                if L <= 1e-15:
                    continue
                t = ((p.x - elem.a.x) * (elem.b.x - elem.a.x) +
                     (p.y - elem.a.y) * (elem.b.y - elem.a.y)) / (L * L)
                if 1e-12 < t < 1 - 1e-12:
                    ts.append(t)
    else:
        for (c, _dc, R) in charts:
            for p in circle_circle_intersections(elem.anchor, elem.radius, c, R):
                th = angle_of(elem.anchor, p)
                if elem.contains_angle(th):
                    t = elem.angle_param(th)
                    if 1e-12 < t < 1 - 1e-12:
                        ts.append(t)
    return ts


def _split_elem(elem: Element, ts: List[float]) -> List[Element]:
    ts = sorted(set([0.0, 1.0] + [t for t in ts if 1e-12 < t < 1 - 1e-12]))
    out = []
    for t0, t1 in zip(ts, ts[1:]):
        if t1 - t0 > 1e-12:
            out.append(elem.sub(t0, t1))
    return out


def _cut_chart_circle(region: Region, w: Point2, R: float, elements,
                      charts, ext_segs) -> List[float]:
    """Angles where a candidate circle can change validity."""
    angs: List[float] = []
    for e in elements:
        if isinstance(e, Seg):
            pts = circle_segment_intersections(w, R, e.a, e.b)
        else:
            pts = [p for p in circle_circle_intersections(w, R, e.anchor, e.radius)
                   if e.contains_angle(angle_of(e.anchor, p))]
        angs.extend(angle_of(w, p) for p in pts)
    for (c, _dc, Rc) in charts:
        if dist(c, w) <= 1e-12:
            continue
        angs.extend(angle_of(w, p)
                    for p in circle_circle_intersections(w, R, c, Rc))
    for (a, b) in ext_segs:
        angs.extend(angle_of(w, p)
                    for p in circle_segment_intersections(w, R, a, b))
    return angs


def _circle_subarcs(w: Point2, R: float, angs: List[float], owner, dqw) -> List[CircArc]:
    if not angs:
        return [CircArc(w, R, 0.0, TAU, owner, dqw)]
    uniq: List[float] = []
    for th in sorted(a % TAU for a in angs):
        if not uniq or th - uniq[-1] > 1e-12:
            uniq.append(th)
    if len(uniq) >= 2 and (uniq[0] + TAU) - uniq[-1] <= 1e-12:
        uniq.pop()
    out = []
    k = len(uniq)
    if k == 1:
        return [CircArc(w, R, uniq[0], TAU, owner, dqw)]
    # clockwise neighbours: each cut angle runs down to the next lower one
    for i in range(k):
        th0 = uniq[(i + 1) % k]
        th1 = uniq[i]
        span = cw_delta(th0, th1)
        if span <= 1e-12:
            continue
        out.append(CircArc(w, R, th0, span, owner, dqw))
    return out


# -- incremental clipping ---------------------------------------------

def _elem_min_dist_samples(e: Element, n: int = 9) -> List[Point2]:
    return [e.point(k / (n - 1)) for k in range(n)]


def _clip(region: Region, elements: List[Element], q: Point2, r: float,
          prev: Sequence[_DistFn]):
    """Intersect the region bounded by `elements` with D_r(q).

    Returns (elements, point):  point set for a pinch to a single point;
    elements None means empty intersection.
    """
    q = Point2(q[0], q[1])
    charts, ext_segs = _charts(region, q, r)
    df = _DistFn(region, q, charts)
    sc = _scale(region)
    tol = VAL_TOL * sc

    kept: List[Tuple[int, Element, bool]] = []
    pieces: List[Element] = []
    order = 0
    any_inside = False
    for e in elements:
        for s in _split_elem(e, _cut_points_on_elem(e, charts)):
            ok = df.within(s.point(0.5), r, tol)
            any_inside = any_inside or ok
            if ok:
                pieces.append(s)
            order += 1

    new_arcs: List[CircArc] = []
    for (w, dqw, R) in charts:
        angs = _cut_chart_circle(region, w, R, elements, charts, ext_segs)
        for arc in _circle_subarcs(w, R, angs, q, dqw):
            mid = arc.point(0.5)
            if abs(df(mid) - r) > tol:
                continue
            if region.classify(mid, eps=tol) == "outside":
                continue
            if any(not p.within(mid, r, tol) for p in prev):
                continue
            new_arcs.append(arc)

    all_pieces: List[Element] = [p for p in pieces if p.length() > 1e-11 * sc]
    all_pieces += [a for a in new_arcs if a.length() > 1e-11 * sc]

    if not all_pieces:
        # everything got clipped: empty, or pinched to a tangency point
        best_d, best_p = math.inf, None
        for e in elements:
            for x in _elem_min_dist_samples(e):
                dx = df(x)
                if dx < best_d:
                    best_d, best_p = dx, x
        for e in elements:
            lo, hi = 0.0, 1.0
            for _ in range(40):
                m1 = lo + (hi - lo) / 3
                m2 = hi - (hi - lo) / 3
                if df(e.point(m1)) <= df(e.point(m2)):
                    hi = m2
                else:
                    lo = m1
            x = e.point((lo + hi) / 2)
            dx = df(x)
            if dx < best_d:
                best_d, best_p = dx, x
        if best_p is not None and abs(best_d - r) <= 10 * tol:
            return [], best_p
        return None, None

    return _assemble(all_pieces, sc), None


def _piece_heading(p: Element, t: float) -> float:
    """Direction of travel at parameter t."""
    if isinstance(p, Seg):
        return math.atan2(p.b.y - p.a.y, p.b.x - p.a.x)
    return (p.start - p.span * t) - 0.5 * math.pi


def _assemble(pieces: List[Element], sc: float) -> List[Element]:
    """Stitch directed pieces into one closed clockwise cycle.

    A junction point can carry several outgoing pieces (a zero-width spur
    of a hull ring passes through its base twice); take the first one
    clockwise from the reversed incoming tangent, U-turns last, so the
    interior stays on the right.
    """
    tol = 1e-6 * sc
    used = [False] * len(pieces)
    # deterministic start: lexicographically smallest start point
    start_i = min(range(len(pieces)),
                  key=lambda i: (pieces[i].point(0.0).x, pieces[i].point(0.0).y))
    chain = [pieces[start_i]]
    used[start_i] = True
    cur_end = pieces[start_i].point(1.0)
    first = pieces[start_i].point(0.0)
    for _ in range(len(pieces) - 1):
        cands = [i for i in range(len(pieces))
                 if not used[i] and dist(cur_end, pieces[i].point(0.0)) < tol]
        if not cands:
            break
        if len(cands) == 1:
            best = cands[0]
        else:
            rev = (_piece_heading(chain[-1], 1.0) + math.pi) % TAU

            def rank(i: int) -> float:
                d = cw_delta(rev, _piece_heading(pieces[i], 0.0))
                return d if d > 1e-7 else TAU

            best = min(cands, key=lambda i: (rank(i), i))
        used[best] = True
        chain.append(pieces[best])
        cur_end = pieces[best].point(1.0)
    if any(not u for u in used):
        leftovers = sum(pieces[i].length() for i in range(len(pieces)) if not used[i])
        if leftovers > 100 * tol:
            raise BoundaryAssemblyError(
                f"{sum(not u for u in used)} pieces unmatched "
                f"(total length {leftovers:.3g})")
    if dist(cur_end, first) > 100 * tol:
        raise BoundaryAssemblyError(
            f"cycle not closed: gap {dist(cur_end, first):.3g}")
    return chain


def disks_intersection(region: Region, sites: Sequence[Point2],
                       r: float) -> Optional[ArcBoundary]:
    """Boundary of (intersection of D_r(site) for all sites) within region.

    None when the intersection is empty.  Starts from the region ring as
    the universe and clips one disk at a time.
    """
    sites = [Point2(s[0], s[1]) for s in sites]
    elements = ring_elements_cw(region.ring)
    prev: List[_DistFn] = []
    sc = _scale(region)
    tol = VAL_TOL * sc
    pinch: Optional[Point2] = None
    for q in sites:
        if pinch is not None:
            if region.distance(q, pinch) > r + 10 * tol:
                return None
            continue
        elements, pinch = _clip(region, elements, q, r, prev)
        if elements is None and pinch is None:
            return None
        charts, _ = _charts(region, q, r)
        prev.append(_DistFn(region, q, charts))
    if pinch is not None:
        return ArcBoundary([], r, tuple(sites), point=pinch)
    assert elements is not None
    return ArcBoundary(elements, r, tuple(sites))


def geodesic_circle(tp: TriangulatedPolygon, q, r: float) -> List[CircArc]:
    """Arc pieces of the geodesic circle of radius r around q, inside P."""
    region = Region.of(tp)
    b = disks_intersection(region, [Point2(q[0], q[1])], r)
    if b is None or b.is_point:
        return []
    return [e for e in b.elements if isinstance(e, CircArc)]


def disk_contains(tp: TriangulatedPolygon, c, r: float, x) -> bool:
    return Region.of(tp).distance(c, x) <= r + 1e-9 * max(1.0, tp.diameter)


# -- events on an arc boundary ----------------------------------------

def compute_events(region: Region, boundary: ArcBoundary,
                   interior: Sequence[Point2], ref_elem: int, ref_pos: Point2):
    """Events of each interior point's disk on the boundary's arcs.

    Returns (events, sides): events sorted by clockwise length from the
    reference position; sides maps each point's key to "covers",
    "disjoint", or "events".  Coverage transitions are taken at true
    crossings (distance = radius) and at arc junctions where a covered
    arc run is truncated by a non-arc piece of the boundary.
    """
    r = boundary.radius
    sc = _scale(region)
    tol = VAL_TOL * sc
    arcs = boundary.arcs()
    if not arcs:
        raise NoArcs("boundary has no arcs")
    cum = boundary.cum_lengths()
    total = boundary.total_length()
    ref_abs = cum[ref_elem] + _param_on_elem(boundary.elements[ref_elem], ref_pos)

    def rel(p_abs: float) -> float:
        return (p_abs - ref_abs) % total if total > 0 else 0.0

    events: List[Event] = []
    sides: Dict[Tuple[float, float], str] = {}
    for q in interior:
        q = Point2(q[0], q[1])
        charts, _ = _charts(region, q, r)
        df = _DistFn(region, q, charts)
        # split every arc at q's circle crossings, classify sub-arcs
        runs: List[Tuple[int, Element, bool]] = []
        for idx, arc in arcs:
            ts = _cut_points_on_elem(arc, charts)
            for s in _split_elem(arc, ts):
                runs.append((idx, s, df.within(s.point(0.5), r, tol)))
        if all(c for (_i, _s, c) in runs):
            sides[(q.x, q.y)] = "covers"
            continue
        if not any(c for (_i, _s, c) in runs):
            sides[(q.x, q.y)] = "disjoint"
            continue
        sides[(q.x, q.y)] = "events"
        # maximal covered runs in cyclic order over arc material only
        n = len(runs)
        start = next(i for i in range(n) if not runs[i][2])
        rot = [runs[(start + i) % n] for i in range(n)]
        i = 0
        while i < len(rot):
            if not rot[i][2]:
                i += 1
                continue
            j = i
            while j < len(rot) and rot[j][2]:
                j += 1
            first_idx, first_piece, _ = rot[i]
            last_idx, last_piece, _ = rot[j - 1]
            pin = first_piece.point(0.0)
            pout = last_piece.point(1.0)
            events.append(Event(pin, q, "in",
                                rel(cum[first_idx] +
                                    _param_on_elem(boundary.elements[first_idx], pin)),
                                first_idx))
            events.append(Event(pout, q, "out",
                                rel(cum[last_idx] +
                                    _param_on_elem(boundary.elements[last_idx], pout)),
                                last_idx))
            i = j
    events.sort(key=lambda e: (e.param, e.flag == "out",
                               e.owner.x, e.owner.y))
    return events, sides


def _param_on_elem(e: Element, p: Point2) -> float:
    if isinstance(e, Seg):
        L = e.length()
        if L <= 1e-15:
            return 0.0
        t = ((p.x - e.a.x) * (e.b.x - e.a.x) +
             (p.y - e.a.y) * (e.b.y - e.a.y)) / (L * L)
    else:
        t = e.angle_param(angle_of(e.anchor, p))
    return max(0.0, min(1.0, t)) * e.length()


# -- geodesic one-center ----------------------------------------------

def _as_region(obj) -> Region:
    if isinstance(obj, Region):
        return obj
    return Region.of(obj)


def _disk2(region: Region, a: Point2, b: Point2) -> OneCenterResult:
    p = region.path(a, b)
    L = polyline_length(p)
    half = L / 2
    acc = 0.0
    for u, v in zip(p, p[1:]):
        step = dist(u, v)
        if acc + step >= half - 1e-15:
            t = 0.0 if step == 0 else (half - acc) / step
            c = Point2(u.x + (v.x - u.x) * t, u.y + (v.y - u.y) * t)
            return OneCenterResult(c, half, (a, b))
        acc += step
    return OneCenterResult(p[-1], half, (a, b))


def _grad_unit(region: Region, x: Point2, s: Point2) -> Tuple[float, float]:
    p = region.path(s, x)
    w = p[-2] if len(p) >= 2 else s
    dx, dy = x.x - w.x, x.y - w.y
    n = math.hypot(dx, dy)
    if n <= 1e-15:
        return 0.0, 0.0
    return dx / n, dy / n


def _equalize3(region: Region, a: Point2, b: Point2, c: Point2) -> Optional[Point2]:
    """Point with equal geodesic distance to a, b, c, by damped Newton on
    the local straight-leg charts; None if no seed converges."""
    seeds: List[Point2] = []
    d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    if abs(d) > 1e-12:
        ux = ((a.x ** 2 + a.y ** 2) * (b.y - c.y) + (b.x ** 2 + b.y ** 2) * (c.y - a.y)
              + (c.x ** 2 + c.y ** 2) * (a.y - b.y)) / d
        uy = ((a.x ** 2 + a.y ** 2) * (c.x - b.x) + (b.x ** 2 + b.y ** 2) * (a.x - c.x)
              + (c.x ** 2 + c.y ** 2) * (b.x - a.x)) / d
        seeds.append(Point2(ux, uy))
    seeds.append(_disk2(region, a, b).center)
    seeds.append(_disk2(region, b, c).center)
    seeds.append(_disk2(region, a, c).center)
    seeds.append(Point2((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3))
    sc = _scale(region)
    best: Optional[Tuple[float, Point2]] = None
    for seed in seeds:
        x = seed
        if not region.contains(x, eps=1e-9 * sc):
            x = Point2((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
        ok = False
        for _ in range(100):
            da, db, dc = (region.distance(x, a), region.distance(x, b),
                          region.distance(x, c))
            f1, f2 = da - db, db - dc
            res = math.hypot(f1, f2)
            if res <= 1e-12 * sc:
                ok = True
                break
            ga = _grad_unit(region, x, a)
            gb = _grad_unit(region, x, b)
            gc = _grad_unit(region, x, c)
            j11, j12 = ga[0] - gb[0], ga[1] - gb[1]
            j21, j22 = gb[0] - gc[0], gb[1] - gc[1]
            det = j11 * j22 - j12 * j21
            if abs(det) <= 1e-14:
                break
            sx = (-f1 * j22 + f2 * j12) / det
            sy = (-f2 * j11 + f1 * j21) / det
            n = math.hypot(sx, sy)
            cap = sc / 4
            if n > cap:
                sx, sy = sx / n * cap, sy / n * cap
            # damped: halve until residual does not grow
            lam = 1.0
            improved = False
            for _ in range(20):
                xn = Point2(x.x + lam * sx, x.y + lam * sy)
                if region.contains(xn, eps=1e-9 * sc):
                    dn = math.hypot(
                        region.distance(xn, a) - region.distance(xn, b),
                        region.distance(xn, b) - region.distance(xn, c))
                    if dn < res:
                        x = xn
                        improved = True
                        break
                lam /= 2
            if not improved:
                break
        if ok:
            rad = max(region.distance(x, a), region.distance(x, b),
                      region.distance(x, c))
            if best is None or rad < best[0]:
                best = (rad, x)
    return best[1] if best else None


def _nm_polish(region: Region, pts: Sequence[Point2], x0: Point2) -> Optional[OneCenterResult]:
    from scipy.optimize import minimize

    sc = _scale(region)
    big = 1e6 * sc

    def obj(v):
        p = Point2(v[0], v[1])
        if not region.contains(p, eps=1e-9 * sc):
            return big
        return max(region.distance(p, s) for s in pts)

    res = minimize(obj, [x0.x, x0.y], method="Nelder-Mead",
                   options={"xatol": 1e-12, "fatol": 1e-12, "maxiter": 3000})
    val = obj(res.x)
    if val >= big:
        return None
    c = Point2(res.x[0], res.x[1])
    return OneCenterResult(c, val, ())


def _boundary_pair_candidates(region: Region, pts: Sequence[Point2]) -> List[Point2]:
    """Centers constrained to the ring: corners plus pair-equalization
    roots along each ring segment (used when no interior solution fits)."""
    out = list(region.corners)
    segs = region.ring_segments()
    for a, b in segs:
        L = dist(a, b)
        if L <= 1e-12:
            continue
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                p1, p2 = pts[i], pts[j]

                def g(t):
                    x = Point2(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)
                    return region.distance(x, p1) - region.distance(x, p2)

                K = 8
                vals = [g(k / K) for k in range(K + 1)]
                for k in range(K):
                    if vals[k] == 0 or vals[k] * vals[k + 1] < 0:
                        lo, hi = k / K, (k + 1) / K
                        flo = vals[k]
                        for _ in range(60):
                            mid = (lo + hi) / 2
                            fm = g(mid)
                            if flo * fm <= 0:
                                hi = mid
                            else:
                                lo, flo = mid, fm
                        t = (lo + hi) / 2
                        out.append(Point2(a.x + (b.x - a.x) * t,
                                          a.y + (b.y - a.y) * t))
    return out


def _solve3(region: Region, a: Point2, b: Point2, c: Point2) -> OneCenterResult:
    sc = _scale(region)
    tol = 1e-9 * sc
    cands: List[OneCenterResult] = []
    for (u, v, w) in ((a, b, c), (a, c, b), (b, c, a)):
        d2 = _disk2(region, u, v)
        if region.distance(d2.center, w) <= d2.radius + tol:
            cands.append(d2)
    eq = _equalize3(region, a, b, c)
    if eq is not None:
        rad = max(region.distance(eq, p) for p in (a, b, c))
        cands.append(OneCenterResult(eq, rad, (a, b, c)))
    if not cands:
        for x in _boundary_pair_candidates(region, (a, b, c)):
            rad = max(region.distance(x, p) for p in (a, b, c))
            cands.append(OneCenterResult(x, rad, ()))
        nm = _nm_polish(region, (a, b, c), Point2((a.x + b.x + c.x) / 3,
                                                  (a.y + b.y + c.y) / 3))
        if nm is not None:
            cands.append(nm)
    best = min(cands, key=lambda d: d.radius)
    return best


def one_center(space, pts: Sequence[Point2]) -> OneCenterResult:
    """Smallest geodesic disk covering pts; center anywhere in the space.

    Move-to-front elimination over support sets of size at most three;
    the three-point subproblem uses pair midpoints and a Newton-refined
    equalization point, with constrained-boundary and simplex fallbacks.
    """
    region = _as_region(space)
    uniq: List[Point2] = []
    seen = set()
    for p in pts:
        p = Point2(p[0], p[1])
        k = (p.x, p.y)
        if k not in seen:
            seen.add(k)
            uniq.append(p)
    if not uniq:
        raise ValueError("no points")
    key = frozenset(seen)
    cache = getattr(region, "_onecenter_cache", None)
    if cache is None:
        cache = {}
        region._onecenter_cache = cache
    hit = cache.get(key)
    if hit is not None:
        return hit

    sc = _scale(region)
    tol = 1e-9 * sc

    def covers(d: OneCenterResult, p: Point2) -> bool:
        return region.distance(d.center, p) <= d.radius + tol

    def mtf2(P, q1, q2):
        d = _disk2(region, q1, q2)
        for p in P:
            if not covers(d, p):
                d = _solve3(region, q1, q2, p)
        return d

    def mtf1(P, q):
        d = OneCenterResult(q, 0.0, (q,))
        for i, p in enumerate(P):
            if not covers(d, p):
                d = mtf2(P[:i], q, p)
        return d

    d = OneCenterResult(uniq[0], 0.0, (uniq[0],))
    for i, p in enumerate(uniq):
        if not covers(d, p):
            d = mtf1(uniq[:i], p)

    # the support-set result can only be short through numeric slack;
    # verify full coverage and repair with a global fallback if needed
    rad = max(region.distance(d.center, p) for p in uniq)
    if rad > d.radius + 10 * tol and len(uniq) > 3:
        nm = _nm_polish(region, uniq, d.center)
        if nm is not None and nm.radius < rad:
            d = nm
            rad = nm.radius
    dets = sorted(uniq, key=lambda p: (-region.distance(d.center, p), p.x, p.y))
    dets = tuple(p for p in dets
                 if region.distance(d.center, p) >= rad - 1e-7 * sc)[:3]
    result = OneCenterResult(d.center, rad, dets)
    cache[key] = result
    return result
