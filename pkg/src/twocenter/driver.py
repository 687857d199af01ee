"""Top-level two-center solver.

Puts the pieces together: build the hull of Q, enumerate candidate
chain splits, find an interval free of shortest-path-map distances,
optimize each surviving pair inside it, and keep the best witness.
"""
from __future__ import annotations

import math
import statistics
import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import decision
from .decision import decide, pair_chains
from .disks import one_center
from .errors import (CertificateError, DegenerateHull, InvalidPolygon,
                     PointOutsidePolygon)
from .geom import Point2, dist, polyline_length
from .hull import GeodesicHull, geodesic_hull
from .optimize import RadiusInterval, optimize_pair
from .polygon import SimplePolygon, TriangulatedPolygon, point_in_polygon, triangulate

Key = Tuple[float, float]


@dataclass(frozen=True)
class CandidatePair:
    i: int
    j: int
    kind: str            # "Type1" | "Type2"


@dataclass
class TwoCenterSolution:
    c1: Point2
    c2: Point2
    radius: float
    pair: CandidatePair
    assignment: Dict[Key, int]
    branch_stats: Dict[str, int] = field(default_factory=dict)


def candidate_pairs(h: GeodesicHull) -> List[CandidatePair]:
    """Chain splits that are guaranteed to include an optimal one."""
    k = h.k
    if k < 2:
        raise DegenerateHull(f"{k} extreme(s)")
    if k == 2:
        return [CandidatePair(0, 1, "Type1")]
    sc = max(1.0, h.ambient.diameter)
    tol = 1e-9 * sc

    def balance(i: int, j: int) -> float:
        return max(h.chain_radius((i + 1) % k, j % k),
                   h.chain_radius((j + 1) % k, i % k))

    v_cw = [0] * k
    v_ccw = [0] * k
    for i in range(k):
        order = [(i + 1 + t) % k for t in range(k - 1)]
        vals = [balance(i, j) for j in order]
        lo = min(vals)
        idxs = [t for t, v in enumerate(vals) if v <= lo + tol]
        first, last = idxs[0], idxs[-1]
        if last - first + 1 != len(idxs):
            warnings.warn(
                f"balance minimizers for extreme {i} are not consecutive; "
                f"widening to the enclosing run", RuntimeWarning)
        v_cw[i] = (order[first] - 1) % k
        v_ccw[i] = (order[last] + 1) % k

    chosen: Dict[Tuple[int, int], str] = {}

    def put(i: int, j: int, kind: str):
        i %= k
        j %= k
        if i == j:
            return
        key = (i, j) if i < j else (j, i)
        if key not in chosen:
            chosen[key] = kind

    for i in range(k):
        a = v_ccw[i]
        b = v_cw[(i + 1) % k]
        for j in (a, (a - 1) % k, b, (b - 1) % k):
            put(i, j, "Type1")
        pa = (a - i) % k
        pb = (b - i) % k
        if 0 < pa < pb:
            j = a
            while j != b:
                put(i, j, "Type2")
                j = (j + 1) % k

    return [CandidatePair(i, j, kind)
            for (i, j), kind in sorted(chosen.items())]


def _spm_distances(h: GeodesicHull, qs: Sequence[Point2]) -> List[float]:
    vals: List[float] = []
    for q in qs:
        for _x, d in h.hull_region.spm_points(q):
            vals.append(d)
    return vals


def assistant_interval(h: GeodesicHull,
                       candidates: Sequence[CandidatePair]) -> RadiusInterval:
    """(r_L, r_U] containing the optimum and no site-to-SPM-vertex
    distance, shrunk by repeated median tests."""
    if not candidates:
        raise DegenerateHull("no candidate pairs")
    qs = list(h.extremes) + h.boundary_points + h.interior_points
    order = sorted(candidates,
                   key=lambda p: (max(h.chain_radius((p.i + 1) % h.k, p.j),
                                      h.chain_radius((p.j + 1) % h.k, p.i)),
                                  p.i, p.j))

    def feasible(r: float) -> bool:
        return any(decide(h, p.i, p.j, r).feasible for p in order)

    r_l = 0.0
    r_u = h.hull_center().radius
    while True:
        inside = [v for v in _spm_distances(h, qs) if r_l < v < r_u]
        if not inside:
            return RadiusInterval(r_l, r_u)
        med = statistics.median_low(inside)
        if feasible(med):
            r_u = med
        else:
            r_l = med


def _point_along(path: Sequence[Point2], s: float) -> Point2:
    acc = 0.0
    for a, b in zip(path, path[1:]):
        step = dist(a, b)
        if acc + step >= s - 1e-12:
            t = 0.0 if step <= 0 else max(0.0, min(1.0, (s - acc) / step))
            return Point2(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)
        acc += step
    return path[-1]


def _line_solution(h: GeodesicHull, pts: List[Point2]) -> TwoCenterSolution:
    """All of Q on one geodesic path: a prefix split in path order."""
    region = h.region
    far = max(((a, b) for a in h.extremes for b in h.extremes),
              key=lambda ab: region.distance(ab[0], ab[1]))
    a, b = far
    path = region.path(a, b)
    coord = sorted(set((region.distance(a, q), q) for q in pts))
    svals = [s for s, _q in coord]
    best = None
    for cut in range(1, len(svals) + 1):
        left = svals[:cut]
        right = svals[cut:]
        r = (left[-1] - left[0]) / 2 if left else 0.0
        if right:
            r = max(r, (right[-1] - right[0]) / 2)
        if best is None or r < best[0] - 1e-15:
            best = (r, cut)
    r, cut = best
    left = svals[:cut]
    right = svals[cut:]
    c1 = _point_along(path, (left[0] + left[-1]) / 2)
    c2 = _point_along(path, (right[0] + right[-1]) / 2) if right else c1
    assign: Dict[Key, int] = {}
    for s, q in coord:
        assign[(q.x, q.y)] = 1 if s <= left[-1] + 1e-12 else 2
    pair = CandidatePair(0, 1 % max(1, h.k), "Type1")
    return TwoCenterSolution(c1, c2, r, pair, assign)


def _ring_area2(ring: Sequence[Point2]) -> float:
    n = len(ring)
    return sum(ring[i].x * ring[(i + 1) % n].y - ring[(i + 1) % n].x * ring[i].y
               for i in range(n))


def _assignment(h: GeodesicHull, pr: CandidatePair, c1: Point2, c2: Point2,
                pts: Sequence[Point2]) -> Dict[Key, int]:
    region = h.region
    forced: Dict[Key, int] = {}
    if h.k >= 2 and pr.i != pr.j:
        pc = pair_chains(h, pr.i, pr.j)
        for e in pc.chain1:
            forced[(e.x, e.y)] = 1
        for e in pc.chain2:
            forced[(e.x, e.y)] = 2
    out: Dict[Key, int] = {}
    for q in pts:
        key = (q.x, q.y)
        if key in forced:
            out[key] = forced[key]
        else:
            out[key] = 1 if region.distance(q, c1) <= region.distance(q, c2) else 2
    return out


def _certify(h: GeodesicHull, sol: TwoCenterSolution, pts: Sequence[Point2]):
    region = h.region
    sc = max(1.0, h.ambient.diameter)
    worst = 0.0
    for q in pts:
        worst = max(worst, min(region.distance(q, sol.c1),
                               region.distance(q, sol.c2)))
    if worst > sol.radius * (1 + 1e-6) + 1e-9 * sc:
        raise CertificateError(
            f"coverage {worst} exceeds radius {sol.radius}")
    for c in (sol.c1, sol.c2):
        if h.hull_region.classify(c) == "outside":
            raise CertificateError(f"center {c} outside the hull")


def _solve_on(tp: TriangulatedPolygon, pts: List[Point2]) -> TwoCenterSolution:
    stats: Counter = Counter()
    old_hook = decision.BRANCH_HOOK
    decision.BRANCH_HOOK = lambda br, feas: stats.update([f"{br}:{'y' if feas else 'n'}"])
    try:
        uniq: List[Point2] = []
        seen = set()
        for q in pts:
            if (q.x, q.y) not in seen:
                seen.add((q.x, q.y))
                uniq.append(q)
        if len(uniq) == 1:
            q = uniq[0]
            sol = TwoCenterSolution(q, q, 0.0, CandidatePair(0, 0, "Type1"),
                                    {(q.x, q.y): 1 for q in pts})
        elif len(uniq) == 2:
            a, b = uniq
            assign = {(q.x, q.y): (1 if (q.x, q.y) == (a.x, a.y) else 2)
                      for q in uniq}
            sol = TwoCenterSolution(a, b, 0.0, CandidatePair(0, 1, "Type1"), assign)
        else:
            h = geodesic_hull(tp, uniq)
            sc = max(1.0, tp.diameter)
            if h.k == 1:
                c = h.extreme(0)
                oc = one_center(h.region, uniq)
                sol = TwoCenterSolution(oc.center, oc.center, oc.radius,
                                        CandidatePair(0, 0, "Type1"),
                                        {(q.x, q.y): 1 for q in uniq})
            elif h.k == 2 or abs(_ring_area2(h.ring)) <= 1e-9 * sc * sc:
                sol = _line_solution(h, uniq)
            else:
                pairs = candidate_pairs(h)
                iv = assistant_interval(h, pairs)
                order = sorted(pairs,
                               key=lambda p: (max(h.chain_radius((p.i + 1) % h.k, p.j),
                                                  h.chain_radius((p.j + 1) % h.k, p.i)),
                                              p.i, p.j))
                best: Optional[Tuple[float, Point2, Point2, CandidatePair]] = None
                for p in order:
                    hi = iv.hi if best is None else min(iv.hi, best[0])
                    if hi <= iv.lo:
                        break
                    got = optimize_pair(h, p.i, p.j, RadiusInterval(iv.lo, hi))
                    if got is None:
                        continue
                    r, c1, c2 = got
                    if best is None or r < best[0] - 1e-15:
                        best = (r, c1, c2, p)
                if best is None:
                    raise CertificateError("no candidate pair optimized")
                r, c1, c2, p = best
                sol = TwoCenterSolution(c1, c2, r, p,
                                        _assignment(h, p, c1, c2, uniq))
            _certify(h, sol, uniq)
        sol.branch_stats = dict(sorted(stats.items()))
        return sol
    finally:
        decision.BRANCH_HOOK = old_hook


def two_center(poly: SimplePolygon, points: Sequence) -> TwoCenterSolution:
    """Optimal two geodesic centers for the given sites."""
    if not points:
        raise PointOutsidePolygon("no points given")
    pts = [Point2(float(p[0]), float(p[1])) for p in points]
    for q in pts:
        if point_in_polygon(poly, q) == "outside":
            raise PointOutsidePolygon(f"{tuple(q)} outside the polygon")
    tp0 = triangulate(poly)
    diam = tp0.diameter
    scale = 1.0
    if diam > 0:
        scale = 2.0 ** round(math.log2(64.0 / diam))
    if scale != 1.0:
        sp = SimplePolygon([(v.x * scale, v.y * scale) for v in poly.vertices])
        tp = triangulate(sp)
        spts = [Point2(q.x * scale, q.y * scale) for q in pts]
    else:
        tp = tp0
        spts = pts
    sol = _solve_on(tp, spts)
    if scale != 1.0:
        inv = 1.0 / scale
        assign = {}
        for q in pts:
            key = (q.x * scale, q.y * scale)
            assign[(q.x, q.y)] = sol.assignment.get(key, 1)
        sol = TwoCenterSolution(
            Point2(sol.c1.x * inv, sol.c1.y * inv),
            Point2(sol.c2.x * inv, sol.c2.y * inv),
            sol.radius * inv, sol.pair, assign, sol.branch_stats)
    else:
        assign = {(q.x, q.y): sol.assignment.get((q.x, q.y), 1) for q in pts}
        sol.assignment = assign
    return sol
