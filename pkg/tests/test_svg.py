import math
import xml.etree.ElementTree as ET

from twocenter.geom import Point2
from twocenter.polygon import SimplePolygon, triangulate
from twocenter.region import Region, geodesic_distance
from twocenter.svg import disk_outline, render_svg

SQ4 = SimplePolygon([Point2(0, 0), Point2(4, 0), Point2(4, 4), Point2(0, 4)])
L6 = SimplePolygon([Point2(0, 0), Point2(4, 0), Point2(4, 2), Point2(2, 2),
                    Point2(2, 4), Point2(0, 4)])
PTS = [Point2(1, 1), Point2(3, 1), Point2(3, 3), Point2(1, 3)]


def test_document_structure():
    doc = render_svg(SQ4, PTS)
    root = ET.fromstring(doc)
    assert root.tag.endswith("svg")
    assert "viewBox" in root.attrib
    assert doc.count("<circle") >= len(PTS)


def test_solution_overlay():
    plain = render_svg(SQ4, PTS)
    solved = render_svg(SQ4, PTS, centers=(Point2(1, 2), Point2(3, 2)),
                        radius=1.0)
    ET.fromstring(solved)
    assert solved.count("<circle") > plain.count("<circle")
    assert "#c03028" in solved and "#2a7a3b" in solved
    assert "#c03028" not in plain


def test_render_deterministic():
    a = render_svg(L6, PTS[:2], centers=(Point2(1, 1), Point2(3, 1)), radius=0.5)
    b = render_svg(L6, PTS[:2], centers=(Point2(1, 1), Point2(3, 1)), radius=0.5)
    assert a == b


def test_disk_outline_interior_circle():
    tp = triangulate(SQ4)
    pieces = disk_outline(tp, Point2(2, 2), 1.0)
    assert len(pieces) == 1
    for p in pieces[0]:
        assert abs(math.hypot(p.x - 2, p.y - 2) - 1.0) <= 1e-9


def test_disk_outline_wrapped():
    tp = triangulate(L6)
    pieces = disk_outline(tp, Point2(3, 1), 2.0)
    assert pieces
    pts = [p for piece in pieces for p in piece]
    # parts of the boundary wrap past the reflex corner into the far arm
    assert any(p.y > 2.0 + 1e-9 for p in pts)
    for p in pts:
        assert abs(geodesic_distance(tp, Point2(3, 1), p) - 2.0) <= 1e-6
