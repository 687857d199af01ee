"""Simple polygons, validation, and ear-clipping triangulation."""
from __future__ import annotations

import math
from typing import List, Tuple

from .errors import InvalidPolygon
from .geom import (EPS, Point2, bbox, bbox_diameter, cross, dist, orientation,
                   ring_contains, seg_point_distance, segments_properly_cross)


class SimplePolygon:
    """A simple polygon, stored counterclockwise.

    Construction merges consecutive duplicate vertices (within eps), enforces
    counterclockwise orientation and checks simplicity; a self-intersecting
    input raises InvalidPolygon.
    """

    def __init__(self, vertices, eps: float = EPS):
        pts = [Point2(float(p[0]), float(p[1])) for p in vertices]
        merged: List[Point2] = []
        for p in pts:
            if merged and dist(merged[-1], p) <= eps:
                continue
            merged.append(p)
        if len(merged) >= 2 and dist(merged[0], merged[-1]) <= eps:
            merged.pop()
        if len(merged) < 3:
            raise InvalidPolygon("need at least 3 distinct vertices")
        area2 = sum(cross(merged[0], merged[i], merged[i + 1])
                    for i in range(1, len(merged) - 1))
        if abs(area2) <= eps * max(1.0, bbox_diameter(merged)):
            raise InvalidPolygon("zero area")
        if area2 < 0:
            merged.reverse()
        self.vertices: Tuple[Point2, ...] = tuple(merged)
        self.n = len(merged)
        self._check_simple()
        self.bbox = bbox(self.vertices)
        self.diameter = bbox_diameter(self.vertices)

    def _check_simple(self):
        n = self.n
        V = self.vertices
        for i in range(n):
            a, b = V[i], V[(i + 1) % n]
            for j in range(i + 1, n):
                c, d = V[j], V[(j + 1) % n]
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue
                if segments_properly_cross(a, b, c, d):
                    raise InvalidPolygon(f"edges {i} and {j} cross")
        # a vertex sitting in the interior of a non-adjacent edge also
        # breaks simplicity
        for i in range(n):
            p = V[i]
            for j in range(n):
                if j == i or (j + 1) % n == i:
                    continue
                a, b = V[j], V[(j + 1) % n]
                if seg_point_distance(p, a, b) <= 1e-12 * max(1.0, abs(p.x), abs(p.y)):
                    # touching is allowed only at shared endpoints
                    if dist(p, a) > 1e-12 and dist(p, b) > 1e-12:
                        raise InvalidPolygon(f"vertex {i} lies on edge {j}")

    def edges(self):
        V = self.vertices
        return [(V[i], V[(i + 1) % self.n]) for i in range(self.n)]

    def __repr__(self):
        return f"SimplePolygon({self.n} vertices)"


def point_in_polygon(poly: SimplePolygon, p, eps: float = EPS) -> str:
    """'inside' / 'boundary' / 'outside' classification of p against poly."""
    return ring_contains(p, poly.vertices, eps)


def _tri_contains(a, b, c, p, eps: float) -> bool:
    d1 = cross(a, b, p)
    d2 = cross(b, c, p)
    d3 = cross(c, a, p)
    scale = max(1.0, abs(p[0]), abs(p[1]))
    t = eps * scale
    return d1 >= -t and d2 >= -t and d3 >= -t


class TriangulatedPolygon:
    """A simple polygon plus a triangulation and its dual tree.

    Triangles are index triples into `polygon.vertices`, counterclockwise.
    The dual graph of a triangulated simple polygon is a tree; `dual[t]`
    lists (neighbor_triangle, shared_edge_index_pair).
    """

    def __init__(self, polygon: SimplePolygon, triangles):
        self.polygon = polygon
        self.triangles: List[Tuple[int, int, int]] = list(triangles)
        self.vertices = polygon.vertices
        self.diameter = polygon.diameter
        edge_map = {}
        self.dual: List[List[Tuple[int, Tuple[int, int]]]] = [[] for _ in self.triangles]
        for t, tri in enumerate(self.triangles):
            for k in range(3):
                e = (tri[k], tri[(k + 1) % 3])
                key = (min(e), max(e))
                other = edge_map.get(key)
                if other is None:
                    edge_map[key] = t
                else:
                    self.dual[t].append((other, key))
                    self.dual[other].append((t, key))
        # caches shared by every geodesic query over this polygon
        self._path_cache = {}
        self._locate_cache = {}
        self._region = None

    # Point location by scanning; n is small and results are cached.
    def locate(self, p) -> int:
        key = (p[0], p[1])
        hit = self._locate_cache.get(key)
        if hit is not None:
            return hit
        V = self.vertices
        best = -1
        for t, (i, j, k) in enumerate(self.triangles):
            if _tri_contains(V[i], V[j], V[k], p, 1e-12):
                best = t
                break
        if best < 0:
            for t, (i, j, k) in enumerate(self.triangles):
                if _tri_contains(V[i], V[j], V[k], p, 1e-7):
                    best = t
                    break
        if best < 0:
            best = min(
                range(len(self.triangles)),
                key=lambda t: min(
                    seg_point_distance(p, V[self.triangles[t][a]], V[self.triangles[t][(a + 1) % 3]])
                    for a in range(3)),
            )
        self._locate_cache[key] = best
        return best

    def __repr__(self):
        return f"TriangulatedPolygon({self.polygon.n} vertices, {len(self.triangles)} triangles)"


def triangulate(poly: SimplePolygon) -> TriangulatedPolygon:
    """Ear-clipping triangulation.

    Collinear vertices produce zero-area ears, which are dropped without
    emitting a triangle.  Runs in O(n^2), fine at this scale.
    """
    V = poly.vertices
    n = poly.n
    idx = list(range(n))
    tris: List[Tuple[int, int, int]] = []

    def is_ear(ii: int) -> bool:
        m = len(idx)
        a, b, c = idx[(ii - 1) % m], idx[ii], idx[(ii + 1) % m]
        if orientation(V[a], V[b], V[c]) <= 0:
            return False
        for j in idx:
            if j in (a, b, c):
                continue
            if _tri_contains(V[a], V[b], V[c], V[j], 1e-12):
                return False
        return True

    guard = 0
    while len(idx) > 3:
        guard += 1
        if guard > 4 * n * n:
            raise InvalidPolygon("ear clipping failed to converge")
        m = len(idx)
        clipped = False
        # drop exactly-straight vertices first, they carry no area
        for ii in range(m):
            a, b, c = idx[(ii - 1) % m], idx[ii], idx[(ii + 1) % m]
            if orientation(V[a], V[b], V[c]) == 0 and \
                    seg_point_distance(V[b], V[a], V[c]) <= EPS * max(1.0, poly.diameter):
                del idx[ii]
                clipped = True
                break
        if clipped:
            continue
        for ii in range(m):
            if is_ear(ii):
                a, b, c = idx[(ii - 1) % m], idx[ii], idx[(ii + 1) % m]
                tris.append((a, b, c))
                del idx[ii]
                clipped = True
                break
        if not clipped:
            raise InvalidPolygon("no ear found; polygon is not simple")
    if len(idx) == 3:
        a, b, c = idx
        if orientation(V[a], V[b], V[c]) > 0:
            tris.append((a, b, c))
    return TriangulatedPolygon(poly, tris)
