"""Feasibility test for one chain split at one radius.

decide(h, i, j, r) answers whether two geodesic disks of radius r can
cover Q so that disk 1 contains the extreme chain v_{j+1}..v_i and disk 2
contains v_{i+1}..v_j.  The cascade: whole-hull disk, shared-vertex
search, chain one-centers, interior-free exit, arc coverage analysis,
and finally the three-cursor event scan.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .disks import (ArcBoundary, Event, compute_events, disks_intersection,
                    one_center)
from .errors import InvalidPair, NoArcs
from .geom import Point2, dist, seg_point_distance
from .hull import GeodesicHull
from .region import Region

Key = Tuple[float, float]


def _key(p) -> Key:
    return (p[0], p[1])


@dataclass(frozen=True)
class PairChains:
    """Everything fixed about one (i, j) split."""
    i: int
    j: int
    chain1: Tuple[Point2, ...]   # v_{j+1} .. v_i, served by c1
    chain2: Tuple[Point2, ...]   # v_{i+1} .. v_j, served by c2
    free: Tuple[Point2, ...]     # points not pinned to either chain


def pair_chains(h: GeodesicHull, i: int, j: int) -> PairChains:
    k = h.k
    if k < 2 or i % k == j % k:
        raise InvalidPair(f"({i},{j}) with k={k}")
    i %= k
    j %= k
    cache = getattr(h, "_chain_cache", None)
    if cache is None:
        cache = {}
        h._chain_cache = cache
    hit = cache.get((i, j))
    if hit is not None:
        return hit
    c1 = tuple(h.chain_extremes(j + 1, i))
    c2 = tuple(h.chain_extremes(i + 1, j))
    sc = max(1.0, h.ambient.diameter)
    tol = 1e-9 * sc
    free: List[Point2] = list(h.interior_points)
    if h.boundary_points:
        p1 = h.boundary_portion(j + 1, i)
        p2 = h.boundary_portion(i + 1, j)

        def on_portion(q, portion):
            if len(portion) == 1:
                return dist(q, portion[0]) <= tol
            return any(seg_point_distance(q, portion[s], portion[s + 1]) <= tol
                       for s in range(len(portion) - 1))

        for b in h.boundary_points:
            if not on_portion(b, p1) and not on_portion(b, p2):
                free.append(b)
    pc = PairChains(i, j, c1, c2, tuple(free))
    cache[(i, j)] = pc
    return pc


@dataclass
class DecisionResult:
    feasible: bool
    branch: str
    centers: Optional[Tuple[Point2, Point2]] = None
    assignment: Optional[Dict[Key, int]] = None


def _coverage_ok(region: Region, pc: PairChains, r: float,
                 c1: Point2, c2: Point2, tol: float) -> bool:
    if any(region.distance(c1, e) > r + tol for e in pc.chain1):
        return False
    if any(region.distance(c2, e) > r + tol for e in pc.chain2):
        return False
    return all(min(region.distance(c1, q), region.distance(c2, q)) <= r + tol
               for q in pc.free)


def _result(h: GeodesicHull, pc: PairChains, branch: str, r: float,
            c1: Point2, c2: Point2) -> DecisionResult:
    region = h.region
    assign: Dict[Key, int] = {}
    for e in pc.chain1:
        assign[_key(e)] = 1
    for e in pc.chain2:
        assign[_key(e)] = 2
    for q in list(pc.free) + h.boundary_points + h.interior_points:
        if _key(q) in assign:
            continue
        assign[_key(q)] = 1 if region.distance(c1, q) <= region.distance(c2, q) else 2
    return DecisionResult(True, branch, (c1, c2), assign)


# -- shared-vertex search ---------------------------------------------

def _ring_param(h: GeodesicHull, p: Point2) -> float:
    """Clockwise length coordinate of a point on the hull ring."""
    ring = h.ring
    n = len(ring)
    sc = max(1.0, h.ambient.diameter)
    acc = 0.0
    best = None
    for s in range(n):
        a, b = ring[s], ring[(s + 1) % n]
        L = dist(a, b)
        if L > 0 and seg_point_distance(p, a, b) <= 1e-7 * sc:
            t = ((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / (L * L)
            t = max(0.0, min(1.0, t))
            cand = acc + t * L
            if best is None:
                best = cand
        acc += L
    if best is None:
        # nearest ring vertex as a fallback anchor
        s = min(range(n), key=lambda s: dist(p, ring[s]))
        best = sum(dist(ring[t], ring[(t + 1) % n]) for t in range(s))
    return best


def shared_vertex_decide(h: GeodesicHull, i: int, j: int, r: float,
                         v: Optional[Point2] = None):
    """Witness centers whose disks both contain one of the four split
    vertices, or None.  Free points are ordered by where the straight
    extension of the path from the shared vertex meets the hull ring;
    every prefix/suffix split of that order is tried on both sides.
    """
    pc = pair_chains(h, i, j)
    region = h.region
    sc = max(1.0, h.ambient.diameter)
    tol = 1e-7 * sc
    vs = [v] if v is not None else [
        h.extreme(pc.i), h.extreme(pc.i + 1), h.extreme(pc.j), h.extreme(pc.j + 1)]
    seen = set()
    ring_total = sum(dist(h.ring[s], h.ring[(s + 1) % len(h.ring)])
                     for s in range(len(h.ring)))
    for vx in vs:
        if _key(vx) in seen:
            continue
        seen.add(_key(vx))
        base = _ring_param(h, vx)
        order: List[Tuple[float, Point2]] = []
        for q in pc.free:
            hq = h.hull_region.extension_point(vx, q)
            p = (_ring_param(h, hq) - base) % ring_total if ring_total > 0 else 0.0
            order.append((p, q))
        order.sort(key=lambda t: (t[0], t[1].x, t[1].y))
        pts = [q for _p, q in order]
        m = len(pts)
        for flip in (False, True):
            for cut in range(m + 1):
                pre = pts[:cut]
                suf = pts[cut:]
                s1, s2 = (suf, pre) if not flip else (pre, suf)
                set1 = list(pc.chain1) + [vx] + list(s1)
                set2 = list(pc.chain2) + [vx] + list(s2)
                d1 = one_center(region, set1)
                if d1.radius > r + 1e-12 * sc:
                    continue
                d2 = one_center(region, set2)
                if d2.radius > r + 1e-12 * sc:
                    continue
                if _coverage_ok(region, pc, r, d1.center, d2.center, tol):
                    return d1.center, d2.center
    return None


# -- events with a verified reference point ---------------------------

@dataclass
class SideData:
    boundary: ArcBoundary
    events: List[Event]
    sides: Dict[Key, str]
    ref_pos: Point2
    total: float


def _prepare_side(region: Region, boundary: ArcBoundary,
                  interior: Sequence[Point2], sc: float) -> SideData:
    arcs = boundary.arcs()
    if not arcs:
        raise NoArcs("no arcs on this side")
    e0 = arcs[0][0]
    p0 = boundary.elements[e0].point(0.0)
    events, sides = compute_events(region, boundary, interior, e0, p0)
    total = boundary.total_length()
    spans: List[Tuple[float, float]] = []
    by_owner: Dict[Key, List[Event]] = {}
    for e in events:
        by_owner.setdefault(_key(e.owner), []).append(e)
    for k_, evs in by_owner.items():
        ins = [e.param for e in evs if e.flag == "in"]
        outs = [e.param for e in evs if e.flag == "out"]
        for a, b in zip(ins, outs):
            spans.append((a, b))
    # a reference point must not sit strictly inside any covered span
    cum = boundary.cum_lengths()
    base = cum[e0]

    def rel(s: float) -> float:
        return (s - base) % total if total > 0 else 0.0

    cands: List[float] = []
    for idx, arc in arcs:
        cands.append(rel(cum[idx]))
        cands.append(rel(cum[idx] + arc.length()))
    cands.extend(e.param for e in events)
    tol = 1e-9 * max(1.0, sc)

    def violations(p: float) -> int:
        n = 0
        for a, b in spans:
            width = (b - a) % total if total > 0 else 0.0
            off = (p - a) % total if total > 0 else 0.0
            if tol < off < width - tol:
                n += 1
        return n

    cands = sorted(set(c % total if total > 0 else 0.0 for c in cands))
    best = min(cands, key=lambda p: (violations(p), p))
    ref_param = best
    # locate the reference position on the boundary
    ref_pos = _pos_at_param(boundary, (ref_param + base) % total if total > 0 else 0.0)
    shifted = [Event(e.position, e.owner, e.flag,
                     (e.param - ref_param) % total if total > 0 else 0.0,
                     e.elem_index) for e in events]
    shifted.sort(key=lambda e: (e.param, e.flag == "out", e.owner.x, e.owner.y))
    return SideData(boundary, shifted, sides, ref_pos, total)


def _pos_at_param(boundary: ArcBoundary, param: float) -> Point2:
    cum = boundary.cum_lengths()
    total = cum[-1]
    if total <= 0:
        return boundary.elements[0].point(0.0)
    param %= total
    for idx, e in enumerate(boundary.elements):
        if param <= cum[idx + 1] + 1e-15:
            L = e.length()
            t = 0.0 if L <= 0 else (param - cum[idx]) / L
            return e.point(max(0.0, min(1.0, t)))
    return boundary.elements[-1].point(1.0)


# -- three-cursor scan -------------------------------------------------

def scan_decide(region: Region, pc: PairChains, r: float,
                side1: SideData, side2: SideData, tol: float):
    """Walk c1 clockwise over side 1's events while two side-2 cursors
    chase clockwise and counterclockwise; test full coverage of the free
    points at every stop.  Returns witness centers or None."""
    free = list(pc.free)
    keys = [_key(q) for q in free]
    qmap = {k_: q for k_, q in zip(keys, free)}
    M1, M2 = side1.events, side2.events
    ev2 = {}
    for e in M2:
        ev2.setdefault(_key(e.owner), {})[e.flag] = e

    pos1 = side1.ref_pos
    pos2c = side2.ref_pos
    pos2cc = side2.ref_pos

    in1 = {k_: region.distance(qmap[k_], pos1) <= r + tol for k_ in keys}
    in2c = {k_: region.distance(qmap[k_], pos2c) <= r + tol for k_ in keys}
    in2cc = dict(in2c)

    def check() -> Optional[Tuple[Point2, Point2]]:
        if all(in1[k_] or in2c[k_] for k_ in keys):
            if _coverage_ok(region, pc, r, pos1, pos2c, tol):
                return pos1, pos2c
        if all(in1[k_] or in2cc[k_] for k_ in keys):
            if _coverage_ok(region, pc, r, pos1, pos2cc, tol):
                return pos1, pos2cc
        return None

    hit = check()
    if hit:
        return hit

    i2c = 0
    i2cc = len(M2) - 1

    def param2c() -> float:
        return 0.0 if i2c == 0 else M2[i2c - 1].param

    def param2cc() -> float:
        return side2.total if i2cc == len(M2) - 1 else M2[i2cc + 1].param

    def chase_cw(target: Event) -> Optional[Tuple[Point2, Point2]]:
        nonlocal i2c, pos2c
        if param2c() > target.param + 1e-12:
            return None
        while i2c < len(M2):
            y = M2[i2c]
            if y.param > target.param + 1e-12:
                break
            i2c += 1
            pos2c = y.position
            if y.flag == "in":
                in2c[_key(y.owner)] = True
            hit = check()
            if hit:
                return hit
            if y is target:
                break
            if y.flag == "out":
                in2c[_key(y.owner)] = False
        return None

    def chase_ccw(target: Event) -> Optional[Tuple[Point2, Point2]]:
        nonlocal i2cc, pos2cc
        if param2cc() < target.param - 1e-12:
            return None
        while i2cc >= 0:
            y = M2[i2cc]
            if y.param < target.param - 1e-12:
                break
            i2cc -= 1
            pos2cc = y.position
            if y.flag == "out":
                in2cc[_key(y.owner)] = True
            hit = check()
            if hit:
                return hit
            if y is target:
                break
            if y.flag == "in":
                in2cc[_key(y.owner)] = False
        return None

    for x in M1:
        pos1 = x.position
        kx = _key(x.owner)
        if x.flag == "in":
            in1[kx] = True
            hit = check()
            if hit:
                return hit
            continue
        # an Out event: x.owner is about to fall out of disk 1
        hit = check()
        if hit:
            return hit
        side = side2.sides.get(kx)
        if side == "events":
            tgt = ev2.get(kx, {})
            if not (in2c.get(kx) and param2c() <= tgt.get("out", x).param):
                t_in = tgt.get("in")
                if t_in is not None:
                    hit = chase_cw(t_in)
                    if hit:
                        return hit
            t_out = tgt.get("out")
            if t_out is not None and not in2cc.get(kx):
                hit = chase_ccw(t_out)
                if hit:
                    return hit
        elif side == "disjoint" and not in2c.get(kx) and not in2cc.get(kx):
            # nobody else can serve x.owner once c1 moves on
            hit = check()
            return hit
        if param2c() > param2cc() + 1e-12:
            hit = check()
            return hit
        in1[kx] = False
        hit = check()
        if hit:
            return hit
    return check()


# -- the cascade -------------------------------------------------------

# optional callback (branch, feasible) fired after every decision;
# the driver uses it to collect statistics
BRANCH_HOOK = None


def decide(h: GeodesicHull, i: int, j: int, r: float) -> DecisionResult:
    """Is there an (i, j)-restricted placement of two radius-r disks?"""
    res = _decide(h, i, j, r)
    hook = BRANCH_HOOK
    if hook is not None:
        hook(res.branch, res.feasible)
    return res


def _decide(h: GeodesicHull, i: int, j: int, r: float) -> DecisionResult:
    pc = pair_chains(h, i, j)
    region = h.region
    sc = max(1.0, h.ambient.diameter)
    tol = 1e-7 * sc

    hc = h.hull_center()
    if r >= hc.radius - 1e-12 * sc:
        return _result(h, pc, "hull-radius", r, hc.center, hc.center)

    sv = shared_vertex_decide(h, i, j, r)
    if sv is not None:
        return _result(h, pc, "shared-vertex", r, sv[0], sv[1])

    oc1 = one_center(region, pc.chain1)
    oc2 = one_center(region, pc.chain2)
    if oc1.radius > r + 1e-12 * sc or oc2.radius > r + 1e-12 * sc:
        return DecisionResult(False, "chain-infeasible")

    if not pc.free:
        return _result(h, pc, "no-free-points", r, oc1.center, oc2.center)

    b1 = disks_intersection(h.hull_region, pc.chain1, r)
    b2 = disks_intersection(h.hull_region, pc.chain2, r)
    if b1 is None or b2 is None:
        return DecisionResult(False, "intersection-empty")

    if b1.is_point or b2.is_point:
        c1 = b1.point if b1.is_point else None
        c2 = b2.point if b2.is_point else None
        if c1 is not None and c2 is not None:
            if _coverage_ok(region, pc, r, c1, c2, tol):
                return _result(h, pc, "pinched", r, c1, c2)
            return DecisionResult(False, "pinched")
        fixed, other_chain = (c1, pc.chain2) if c1 is not None else (c2, pc.chain1)
        assert fixed is not None
        rest = [q for q in pc.free if region.distance(q, fixed) > r + tol]
        oc = one_center(region, list(other_chain) + rest)
        if oc.radius <= r + 1e-12 * sc:
            cc1, cc2 = (fixed, oc.center) if c1 is not None else (oc.center, fixed)
            if _coverage_ok(region, pc, r, cc1, cc2, tol):
                return _result(h, pc, "pinched", r, cc1, cc2)
        return DecisionResult(False, "pinched")

    try:
        s1 = _prepare_side(region, b1, pc.free, sc)
        s2 = _prepare_side(region, b2, pc.free, sc)
    except NoArcs:
        # an arcless intersection equals the hull, so the hull disk works
        if _coverage_ok(region, pc, r, hc.center, hc.center, tol):
            return _result(h, pc, "no-arc", r, hc.center, hc.center)
        return DecisionResult(False, "no-arc-anomaly")

    # a point's disk may meet I_t only through a strip along the hull
    # boundary, so arc classifications alone cannot prove infeasibility;
    # reachability is decided by a one-center instead
    eps = 1e-12 * sc

    def reach(chain, q) -> bool:
        return one_center(region, list(chain) + [q]).radius <= r + eps

    forced2 = [q for q in pc.free if not reach(pc.chain1, q)]
    forced1 = [q for q in pc.free if not reach(pc.chain2, q)]
    fk1 = {_key(q) for q in forced1}
    for q in forced2:
        if _key(q) in fk1:
            return DecisionResult(False, "separated-point")
    if one_center(region, list(pc.chain1) + forced1).radius > r + eps:
        return DecisionResult(False, "forced-overload")
    if one_center(region, list(pc.chain2) + forced2).radius > r + eps:
        return DecisionResult(False, "forced-overload")

    if not s1.events and not s2.events:
        for c1p, c2p in ((s1.ref_pos, s2.ref_pos),
                         (one_center(region, list(pc.chain1) + forced1).center,
                          one_center(region, list(pc.chain2) + forced2).center)):
            if _coverage_ok(region, pc, r, c1p, c2p, tol):
                return _result(h, pc, "no-events", r, c1p, c2p)
        hit = _split_enumerate(region, pc, r, sc, tol)
        if hit is not None:
            return _result(h, pc, "no-events", r, hit[0], hit[1])
        return DecisionResult(False, "no-events")

    quiet = None
    for (sa, sb, ca, cb, flip) in (
            (s1, s2, pc.chain1, pc.chain2, False),
            (s2, s1, pc.chain2, pc.chain1, True)):
        if not sa.events:
            # disks around side a never cross its arcs; points its disks
            # miss entirely must all fit in the other side's disk
            need = {_key(q) for q in pc.free if sa.sides.get(_key(q)) == "disjoint"}
            need |= {_key(q) for q in (forced2 if not flip else forced1)}
            pts = [q for q in pc.free if _key(q) in need]
            oc = one_center(region, list(cb) + pts)
            if oc.radius <= r + eps:
                rest = [q for q in pc.free
                        if region.distance(q, oc.center) > r + tol]
                oca = one_center(region, list(ca) + rest)
                for c_a in (oca.center, sa.ref_pos):
                    c1c, c2c = (oc.center, c_a) if flip else (c_a, oc.center)
                    if _coverage_ok(region, pc, r, c1c, c2c, tol):
                        return _result(h, pc, "one-side-quiet", r, c1c, c2c)
            quiet = True
    if quiet:
        hit = _split_enumerate(region, pc, r, sc, tol)
        if hit is not None:
            return _result(h, pc, "one-side-quiet", r, hit[0], hit[1])
        return DecisionResult(False, "one-side-quiet")

    hit = scan_decide(region, pc, r, s1, s2, tol)
    if hit is not None:
        return _result(h, pc, "scan", r, hit[0], hit[1])
    hit = scan_decide(region, _swap(pc), r, s2, s1, tol)
    if hit is not None:
        return _result(h, pc, "scan", r, hit[1], hit[0])
    hit = _event_pair_sweep(region, pc, r, s1, s2, tol)
    if hit is not None:
        return _result(h, pc, "event-sweep", r, hit[0], hit[1])
    hit = _split_enumerate(region, pc, r, sc, tol)
    if hit is not None:
        return _result(h, pc, "split-enum", r, hit[0], hit[1])
    return DecisionResult(False, "scan")


def _swap(pc: PairChains) -> PairChains:
    return PairChains(pc.j, pc.i, pc.chain2, pc.chain1, pc.free)


def _candidate_positions(side: SideData) -> List[Point2]:
    out = [side.ref_pos]
    for _idx, arc in side.boundary.arcs():
        out.append(arc.point(0.0))
        out.append(arc.point(1.0))
    out.extend(e.position for e in side.events)
    return out


def _split_enumerate(region: Region, pc: PairChains, r: float,
                     sc: float, tol: float, cap: int = 14):
    """Exact restricted decision by assigning free points to sides one
    at a time, pruning with memoized one-centers.  Only consulted when
    the arc machinery could not certify either answer."""
    free = sorted(pc.free, key=lambda p: (p.x, p.y))
    if len(free) > cap:
        return None
    eps = 1e-12 * sc

    def rec(idx: int, s1: List[Point2], s2: List[Point2]):
        oc1 = one_center(region, list(pc.chain1) + s1)
        if oc1.radius > r + eps:
            return None
        oc2 = one_center(region, list(pc.chain2) + s2)
        if oc2.radius > r + eps:
            return None
        if idx == len(free):
            if _coverage_ok(region, pc, r, oc1.center, oc2.center, tol):
                return oc1.center, oc2.center
            return None
        q = free[idx]
        got = rec(idx + 1, s1 + [q], s2)
        if got is not None:
            return got
        return rec(idx + 1, s1, s2 + [q])

    return rec(0, [], [])


def _event_pair_sweep(region: Region, pc: PairChains, r: float,
                      side1: SideData, side2: SideData, tol: float):
    """Exhaustive safety net behind the scan: try every pair of stop
    positions on the two arc sets."""
    free = list(pc.free)
    full = (1 << len(free)) - 1

    def masks(side: SideData) -> List[Tuple[int, Point2]]:
        out = []
        for c in _candidate_positions(side):
            m = 0
            for b, q in enumerate(free):
                if region.distance(q, c) <= r + tol:
                    m |= 1 << b
            out.append((m, c))
        return out

    m1 = masks(side1)
    m2 = masks(side2)
    for ma, ca in m1:
        for mb, cb in m2:
            if (ma | mb) == full and _coverage_ok(region, pc, r, ca, cb, tol):
                return ca, cb
    return None
