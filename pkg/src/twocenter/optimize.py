"""Per-pair radius optimization.

For one chain split (i, j) the optimal radius r*_ij is pinned down in
three moves: narrow an interval until the intersection-boundary event
structure is constant, collect the finitely many radii at which two
point circles can meet on the boundary, then binary search that set
with the decision procedure.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .decision import DecisionResult, PairChains, decide, pair_chains
from .disks import disks_intersection, one_center
from .errors import InfeasibleInterval
from .geom import Point2
from .hull import GeodesicHull
from .region import Region


@dataclass(frozen=True)
class RadiusInterval:
    lo: float          # exclusive
    hi: float          # inclusive

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi}]")

    def contains(self, r: float) -> bool:
        return self.lo < r <= self.hi


@dataclass
class CriticalRadiusSet:
    values: List[float] = field(default_factory=list)
    tags: List[str] = field(default_factory=list)

    def add(self, v: float, tag: str):
        self.values.append(v)
        self.tags.append(tag)

    def sorted_unique(self, eps: float) -> List[float]:
        out: List[float] = []
        for v in sorted(self.values):
            if not out or v - out[-1] > eps:
                out.append(v)
        return out


def _boundary_pair_radii(region: Region, space, a: Point2, b: Point2) -> List[float]:
    from .disks import _boundary_pair_candidates
    vals = []
    for c in _boundary_pair_candidates(space, (a, b)):
        vals.append(region.distance(c, a))
    return vals


def interval_candidates(h: GeodesicHull, i: int, j: int) -> List[float]:
    """Radii at which the boundary structure of either side can change."""
    pc = pair_chains(h, i, j)
    region = h.region
    vals: List[float] = []
    for chain in (pc.chain1, pc.chain2):
        ext = list(chain)
        for a in range(len(ext)):
            for b in range(a + 1, len(ext)):
                vals.append(one_center(region, [ext[a], ext[b]]).radius)
                for c in range(b + 1, len(ext)):
                    vals.append(one_center(region, [ext[a], ext[b], ext[c]]).radius)
        for q in pc.free:
            if ext:
                vals.append(0.5 * max(region.distance(q, e) for e in ext))
                for e in ext:
                    vals.append(0.5 * region.distance(q, e))
            vals.append(one_center(region, ext + [q]).radius)
        pts = ext + list(pc.free)
        # radii at which an arc endpoint crosses a hull corner
        for w in h.hull_region.corners:
            for x in pts:
                vals.append(region.distance(w, x))
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                vals.extend(_boundary_pair_radii(region, h.hull_region,
                                                 pts[a], pts[b]))
    return vals


def _event_signature(h: GeodesicHull, pc: PairChains, r: float):
    """Owner/flag multisets of both event sets at radius r."""
    from .decision import _prepare_side
    from .errors import NoArcs
    sc = max(1.0, h.ambient.diameter)
    sig = []
    for chain in (pc.chain1, pc.chain2):
        b = disks_intersection(h.hull_region, chain, r)
        if b is None:
            sig.append(("empty",))
            continue
        if b.is_point:
            sig.append(("point",))
            continue
        try:
            side = _prepare_side(h.region, b, pc.free, sc)
        except NoArcs:
            sig.append(("noarcs",))
            continue
        sig.append(tuple(sorted(((e.owner.x, e.owner.y), e.flag)
                                for e in side.events)))
    return tuple(sig)


def narrow_interval(h: GeodesicHull, i: int, j: int,
                    iv: RadiusInterval) -> RadiusInterval:
    """Shrink iv around r*_ij until no structure-change radius is inside."""
    if not decide(h, i, j, iv.hi).feasible:
        raise InfeasibleInterval(f"pair ({i},{j}) infeasible at {iv.hi}")
    pc = pair_chains(h, i, j)
    sc = max(1.0, h.ambient.diameter)
    eps = 1e-12 * sc

    def search(cands: Sequence[float]) -> RadiusInterval:
        inside = sorted(v for v in set(cands) if iv.lo + eps < v < iv.hi - eps)
        lo, hi = iv.lo, iv.hi
        a, b = 0, len(inside)        # candidates in (lo, hi)
        while a < b:
            mid = (a + b) // 2
            if decide(h, i, j, inside[mid]).feasible:
                hi = inside[mid]
                b = mid
            else:
                lo = inside[mid]
                a = mid + 1
        return RadiusInterval(lo, hi)

    cands = interval_candidates(h, i, j)
    out = search(cands)
    if not pc.free:
        return out
    for attempt in range(2):
        width = out.hi - out.lo
        probes = [out.lo + width * f for f in (1e-3, 0.5, 1 - 1e-9)]
        sigs = [_event_signature(h, pc, r) for r in probes]
        if all(s == sigs[0] for s in sigs):
            return out
        if attempt == 0:
            cands = list(cands) + probes
            out = search(cands)
    warnings.warn(
        f"event structure varies inside narrowed interval ({out.lo}, {out.hi}] "
        f"for pair ({i},{j}); optimization falls back to direct decision search",
        RuntimeWarning)
    return out


def _coincidence(region: Region, chain: Sequence[Point2], q1: Point2,
                 q2: Point2, iv: RadiusInterval, sc: float) -> Optional[float]:
    oc = one_center(region, list(chain) + [q1, q2])
    rho = oc.radius
    tol = 1e-7 * sc
    if abs(region.distance(oc.center, q1) - rho) > tol:
        return None
    if abs(region.distance(oc.center, q2) - rho) > tol:
        return None
    if chain and abs(max(region.distance(oc.center, e) for e in chain) - rho) > tol:
        return None
    if not iv.contains(rho):
        return None
    return rho


def pair_coincidence_radius(h: GeodesicHull, i: int, j: int, t: int, q1: Point2,
                            q2: Point2, iv: RadiusInterval) -> Optional[float]:
    """Smallest radius whose side-t disk intersection can host both q1's
    and q2's circles through one point; None unless both points determine
    it, a chain extreme pins it to the arcs, and it lies in iv."""
    if q1 == q2:
        raise ValueError("q1 == q2")
    pc = pair_chains(h, i, j)
    chain = pc.chain1 if t == 1 else pc.chain2
    return _coincidence(h.region, chain, q1, q2, iv, max(1.0, h.ambient.diameter))


def critical_radius_set(h: GeodesicHull, i: int, j: int,
                        iv: RadiusInterval) -> CriticalRadiusSet:
    pc = pair_chains(h, i, j)
    out = CriticalRadiusSet()
    free = list(pc.free)
    for t in (1, 2):
        for a in range(len(free)):
            for b in range(a + 1, len(free)):
                rho = pair_coincidence_radius(h, i, j, t, free[a], free[b], iv)
                if rho is not None:
                    out.add(rho, "pair")
    out.add(iv.hi, "endpoint")
    return out


def optimize_pair(h: GeodesicHull, i: int, j: int, iv: RadiusInterval
                  ) -> Optional[Tuple[float, Point2, Point2]]:
    """r*_ij with witness centers, or None when iv.hi is infeasible."""
    hi_res = decide(h, i, j, iv.hi)
    if not hi_res.feasible:
        return None
    try:
        nv = narrow_interval(h, i, j, iv)
    except InfeasibleInterval:
        return None
    sc = max(1.0, h.ambient.diameter)
    crit = critical_radius_set(h, i, j, nv)
    values = crit.sorted_unique(1e-12 * sc)
    if not values or abs(values[-1] - nv.hi) > 1e-12 * sc:
        values.append(nv.hi)
    # leftmost feasible value; monotone in r
    lo_i, hi_i = 0, len(values) - 1
    best: Optional[DecisionResult] = None
    best_r = values[-1]
    while lo_i <= hi_i:
        mid = (lo_i + hi_i) // 2
        res = decide(h, i, j, values[mid])
        if res.feasible:
            best = res
            best_r = values[mid]
            hi_i = mid - 1
        else:
            lo_i = mid + 1
    if best is None:
        best = decide(h, i, j, nv.hi)
        best_r = nv.hi
        if not best.feasible:
            return None
    assert best.centers is not None
    return best_r, best.centers[0], best.centers[1]
