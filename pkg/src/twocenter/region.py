"""Geodesic shortest paths inside a simple polygon.

Paths are computed with the funnel algorithm over the triangulation's dual
tree.  A Region bundles the triangulated polygon with a boundary ring; the
ring may differ from the polygon boundary (a geodesically convex subregion
traced as a cycle, possibly with repeated vertices), in which case geodesic
queries still run in the full polygon but membership and ray casts use the
ring.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import PointOutsidePolygon
from .geom import (EPS, Point2, dist, orientation, polyline_length,
                   ray_segment_hit, ring_contains)
from .polygon import TriangulatedPolygon, point_in_polygon

Key = Tuple[float, float]


def _key(p) -> Key:
    return (p[0], p[1])


def _same(a, b) -> bool:
    return a[0] == b[0] and a[1] == b[1]


def _corridor(tp: TriangulatedPolygon, ts: int, tt: int) -> List[int]:
    """Triangle chain from ts to tt in the dual tree (BFS, unique path)."""
    if ts == tt:
        return [ts]
    prev: Dict[int, Optional[int]] = {ts: None}
    queue = [ts]
    qi = 0
    while qi < len(queue):
        cur = queue[qi]
        qi += 1
        if cur == tt:
            break
        for nb, _ in tp.dual[cur]:
            if nb not in prev:
                prev[nb] = cur
                queue.append(nb)
    chain = [tt]
    while prev[chain[-1]] is not None:
        nxt = prev[chain[-1]]
        assert nxt is not None
        chain.append(nxt)
    chain.reverse()
    return chain


def _portals(tp: TriangulatedPolygon, chain: Sequence[int]):
    """(left, right) portal endpoints for each crossing along the chain.

    Crossing the directed edge u -> v of the source triangle (ccw order)
    puts v on the traveller's left and u on the right.
    """
    V = tp.vertices
    out = []
    for a, b in zip(chain, chain[1:]):
        shared = None
        for nb, key in tp.dual[a]:
            if nb == b:
                shared = key
                break
        assert shared is not None
        tri = tp.triangles[a]
        for k in range(3):
            u, v = tri[k], tri[(k + 1) % 3]
            if (min(u, v), max(u, v)) == shared:
                out.append((V[v], V[u]))
                break
    return out


def _narrows_right(apex, right, p) -> bool:
    if _same(apex, right):
        return True
    o = orientation(apex, right, p)
    if o > 0:
        return True
    return o == 0 and dist(apex, p) < dist(apex, right)


def _narrows_left(apex, left, p) -> bool:
    if _same(apex, left):
        return True
    o = orientation(apex, left, p)
    if o < 0:
        return True
    return o == 0 and dist(apex, p) < dist(apex, left)


def _past_left(apex, left, p) -> bool:
    if _same(apex, left):
        return False
    o = orientation(apex, left, p)
    if o > 0:
        return True
    # collinear but beyond the left point: the path grazes it exactly
    return o == 0 and dist(apex, p) > dist(apex, left)


def _past_right(apex, right, p) -> bool:
    if _same(apex, right):
        return False
    o = orientation(apex, right, p)
    if o < 0:
        return True
    return o == 0 and dist(apex, p) > dist(apex, right)


def _funnel(portals, s: Point2, t: Point2) -> List[Point2]:
    pts = [(s, s)] + list(portals) + [(t, t)]
    path = [s]
    apex, ai = s, 0
    left, li = s, 0
    right, ri = s, 0
    i = 1
    while i < len(pts):
        pl, pr = pts[i]
        if _narrows_right(apex, right, pr):
            if _same(apex, right) or not _past_left(apex, left, pr):
                right, ri = pr, i
            else:
                if not _same(path[-1], left):
                    path.append(left)
                apex, ai = left, li
                left, right = apex, apex
                li = ri = ai
                i = ai + 1
                continue
        if _narrows_left(apex, left, pl):
            if _same(apex, left) or not _past_right(apex, right, pl):
                left, li = pl, i
            else:
                if not _same(path[-1], right):
                    path.append(right)
                apex, ai = right, ri
                left, right = apex, apex
                li = ri = ai
                i = ai + 1
                continue
        i += 1
    if not _same(path[-1], t):
        path.append(t)
    return path


@dataclass
class ShortestPathTree:
    """Distances and predecessors from one source to a set of corners."""
    source: Point2
    dist: Dict[Key, float]
    parent: Dict[Key, Optional[Point2]]

    def distance_to(self, p) -> float:
        return self.dist[_key(p)]

    def parent_of(self, p) -> Optional[Point2]:
        return self.parent[_key(p)]


class Region:
    """Geodesic queries restricted to a ring inside a triangulated polygon."""

    def __init__(self, tp: TriangulatedPolygon, ring: Optional[Sequence[Point2]] = None):
        self.tp = tp
        self.ring: Tuple[Point2, ...] = tuple(ring) if ring is not None else tp.vertices
        seen = set()
        corners: List[Point2] = []
        for p in self.ring:
            k = _key(p)
            if k not in seen:
                seen.add(k)
                corners.append(p)
        self.corners: Tuple[Point2, ...] = tuple(corners)
        self.diameter = tp.diameter
        self._tree_cache: Dict[Key, ShortestPathTree] = {}
        self._spm_cache: Dict[Key, List[Tuple[Point2, float]]] = {}

    @staticmethod
    def of(tp: TriangulatedPolygon) -> "Region":
        if tp._region is None:
            tp._region = Region(tp)
        return tp._region

    # -- membership ---------------------------------------------------

    def contains(self, p, eps: float = 1e-9) -> bool:
        return ring_contains(p, self.ring, eps) != "outside"

    def classify(self, p, eps: float = 1e-9) -> str:
        return ring_contains(p, self.ring, eps)

    # -- paths and distances ------------------------------------------

    def path(self, a, b) -> List[Point2]:
        a = Point2(a[0], a[1])
        b = Point2(b[0], b[1])
        if _same(a, b):
            return [a]
        ka, kb = _key(a), _key(b)
        flip = kb < ka
        key = (kb, ka) if flip else (ka, kb)
        cache = self.tp._path_cache
        hit = cache.get(key)
        if hit is None:
            s, t = (b, a) if flip else (a, b)
            ts, tt = self.tp.locate(s), self.tp.locate(t)
            chain = _corridor(self.tp, ts, tt)
            hit = _funnel(_portals(self.tp, chain), s, t)
            cache[key] = hit
        return list(reversed(hit)) if flip else list(hit)

    def distance(self, a, b) -> float:
        return polyline_length(self.path(a, b))

    # -- trees over the ring corners ----------------------------------

    def tree(self, s) -> ShortestPathTree:
        s = Point2(s[0], s[1])
        ks = _key(s)
        hit = self._tree_cache.get(ks)
        if hit is not None:
            return hit
        d: Dict[Key, float] = {ks: 0.0}
        par: Dict[Key, Optional[Point2]] = {ks: None}
        for v in self.corners:
            p = self.path(s, v)
            d[_key(v)] = polyline_length(p)
            par[_key(v)] = p[-2] if len(p) >= 2 else None
        tree = ShortestPathTree(s, d, par)
        self._tree_cache[ks] = tree
        return tree

    # -- boundary rays -------------------------------------------------

    def ring_segments(self):
        R = self.ring
        n = len(R)
        return [(R[i], R[(i + 1) % n]) for i in range(n)]

    def ray_to_boundary(self, origin, direction) -> Optional[Point2]:
        """First ring hit strictly ahead of origin along direction."""
        norm = math.hypot(direction[0], direction[1])
        if norm == 0:
            return None
        d = Point2(direction[0] / norm, direction[1] / norm)
        t_min = 1e-9 * max(1.0, self.diameter)
        best_t, best_p = None, None
        for a, b in self.ring_segments():
            hit = ray_segment_hit(Point2(origin[0], origin[1]), d, a, b, t_min=t_min)
            if hit is not None and (best_t is None or hit[0] < best_t):
                best_t, best_p = hit
        return best_p

    def _ray_enters(self, origin, direction) -> bool:
        norm = math.hypot(direction[0], direction[1])
        if norm == 0:
            return False
        step = 1e-7 * max(1.0, self.diameter)
        probe = Point2(origin[0] + direction[0] / norm * step,
                       origin[1] + direction[1] / norm * step)
        return self.contains(probe, eps=step * 1e-3)

    def extension_point(self, frm, to) -> Point2:
        """Where the path frm -> to, extended straight past `to`, first
        meets the ring.  Returns `to` itself when the extension leaves the
        region immediately (endpoint on the boundary, ray pointing out).
        """
        to = Point2(to[0], to[1])
        p = self.path(frm, to)
        if len(p) < 2:
            return to
        pred = p[-2]
        d = Point2(to.x - pred.x, to.y - pred.y)
        if not self._ray_enters(to, d):
            return to
        hit = self.ray_to_boundary(to, d)
        return hit if hit is not None else to

    # -- shortest path map vertices -----------------------------------

    def spm_points(self, s) -> List[Tuple[Point2, float]]:
        """Corners plus extension hit points, each with its distance from s.

        These are the ring's contributions to the vertex set of the
        shortest path map of s: every corner, and for every corner the
        path bends around, the point where the bent path's straight
        continuation meets the ring again.
        """
        ks = _key(s)
        hit = self._spm_cache.get(ks)
        if hit is not None:
            return hit
        tree = self.tree(s)
        out: List[Tuple[Point2, float]] = []
        for v in self.corners:
            dv = tree.distance_to(v)
            out.append((v, dv))
            pred = tree.parent_of(v)
            if pred is None:
                continue
            d = Point2(v.x - pred.x, v.y - pred.y)
            if not self._ray_enters(v, d):
                continue
            h = self.ray_to_boundary(v, d)
            if h is not None:
                out.append((h, dv + dist(v, h)))
        self._spm_cache[ks] = out
        return out


# Convenience wrappers over a whole polygon's region.  These validate
# containment; Region itself trusts its callers (and tolerates boundary
# fuzz via nearest-triangle location).

def _check_inside(tp: TriangulatedPolygon, *pts) -> None:
    for p in pts:
        if point_in_polygon(tp.polygon, p) == "outside":
            raise PointOutsidePolygon(f"{(p[0], p[1])} outside the polygon")


def shortest_path(tp: TriangulatedPolygon, a, b) -> List[Point2]:
    _check_inside(tp, a, b)
    return Region.of(tp).path(a, b)


def geodesic_distance(tp: TriangulatedPolygon, a, b) -> float:
    _check_inside(tp, a, b)
    return Region.of(tp).distance(a, b)


def shortest_path_tree(tp: TriangulatedPolygon, s) -> ShortestPathTree:
    _check_inside(tp, s)
    return Region.of(tp).tree(s)


def spm_vertices(tp: TriangulatedPolygon, s) -> List[Tuple[Point2, float]]:
    _check_inside(tp, s)
    return Region.of(tp).spm_points(s)
