import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvemin import (
    Disk,
    Line,
    Point,
    Segment,
    bitangent_lines,
    circle_segment_intersections,
    dist_point_point,
    dist_point_segment,
    segment_intersects_disk,
    set_tolerance,
    tangent_lines_point_circle,
    tolerance,
)
from curvemin.geom import dist_points_to_segments, line_segment_intersection, line_segment_intersection_param

coords = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False, allow_infinity=False)
points = st.builds(Point, coords, coords)

ROOT_HALF = math.sqrt(0.5)


def test_tolerance_roundtrip():
    old = tolerance()
    try:
        prev = set_tolerance(1e-6)
        assert prev == old
        assert tolerance() == 1e-6
    finally:
        set_tolerance(old)


def test_set_tolerance_rejects_nonpositive():
    with pytest.raises(ValueError):
        set_tolerance(0.0)


def test_line_canonical_orientation_independent():
    l1 = Line.through(Point(0, 0), Point(2, 2))
    l2 = Line.through(Point(2, 2), Point(0, 0))
    assert l1.a == pytest.approx(l2.a)
    assert l1.b == pytest.approx(l2.b)
    assert l1.c == pytest.approx(l2.c)
    assert math.hypot(l1.a, l1.b) == pytest.approx(1.0)


def test_line_degenerate_rejected():
    with pytest.raises(ValueError):
        Line.from_coefficients(0.0, 0.0, 3.0)


def test_dist_point_segment_cases():
    s = Segment(Point(0, 0), Point(4, 0))
    assert dist_point_segment(Point(2, 3), s) == pytest.approx(3.0)
    assert dist_point_segment(Point(-3, 4), s) == pytest.approx(5.0)
    assert dist_point_segment(Point(7, 4), s) == pytest.approx(5.0)
    degen = Segment(Point(1, 1), Point(1, 1))
    assert dist_point_segment(Point(4, 5), degen) == pytest.approx(5.0)


def test_segment_intersects_disk_closed_boundary():
    d = Disk(Point(0, 2), 2.0)
    touching = Segment(Point(-1, 0), Point(1, 0))
    assert segment_intersects_disk(touching, d)
    missing = Segment(Point(-1, -0.1), Point(1, -0.1))
    assert not segment_intersects_disk(missing, d)


def test_line_segment_intersection_conventions():
    line = Line.through(Point(0, -1), Point(0, 1))
    crossing = Segment(Point(-1, 0), Point(3, 0))
    assert line_segment_intersection_param(line, crossing) == pytest.approx(0.25)
    touch_end = Segment(Point(-2, 5), Point(0, 5))
    assert line_segment_intersection_param(line, touch_end) == 1.0
    collinear = Segment(Point(0, 3), Point(0, 9))
    assert line_segment_intersection_param(line, collinear) == 0.0
    miss = Segment(Point(1, 0), Point(2, 8))
    assert line_segment_intersection_param(line, miss) is None
    pt = line_segment_intersection(line, crossing)
    assert pt == pytest.approx((0.0, 0.0))


def test_tangent_lines_outside_point():
    # From the origin to the circle of radius sqrt(2) about (0, 2) the two
    # tangents are the diagonals y = x and y = -x.
    lines = tangent_lines_point_circle(Point(0, 0), Disk(Point(0, 2), math.sqrt(2)))
    triples = sorted((round(l.a, 6), round(l.b, 6), round(l.c, 6)) for l in lines)
    want = sorted(
        [
            (round(ROOT_HALF, 6), round(-ROOT_HALF, 6), 0.0),
            (round(ROOT_HALF, 6), round(ROOT_HALF, 6), 0.0),
        ]
    )
    assert triples == want


def test_tangent_lines_boundary_and_inside():
    d = Disk(Point(0, 2), 2.0)
    assert tangent_lines_point_circle(Point(0, 1), d) == []
    on_boundary = tangent_lines_point_circle(Point(0, 0), d)
    assert len(on_boundary) == 1
    assert on_boundary[0].signed_distance(Point(0, 0)) == pytest.approx(0.0)


@given(points, st.floats(min_value=0.1, max_value=10.0), points)
@settings(deadline=None, max_examples=200)
def test_tangent_lines_touch_circle(p, radius, center):
    d = Disk(center, radius)
    gap = dist_point_point(p, center) - radius
    if abs(gap) < 1e-6:
        return
    lines = tangent_lines_point_circle(p, d)
    if gap < 0:
        assert lines == []
        return
    assert len(lines) == 2
    for line in lines:
        assert abs(line.signed_distance(p)) < 1e-7
        assert abs(abs(line.signed_distance(center)) - radius) < 1e-6


def test_bitangent_lines_separated_disks():
    lines = bitangent_lines(Disk(Point(0, 0), 1.0), Disk(Point(4, 0), 1.0))
    assert len(lines) == 4
    triples = sorted((round(l.a, 6), round(l.b, 6), round(l.c, 6)) for l in lines)
    assert (0.0, 1.0, -1.0) in triples  # y = 1
    assert (0.0, 1.0, 1.0) in triples  # y = -1
    # Both inner tangents pass through the midpoint (2, 0).
    inner = [l for l in lines if abs(l.b) != pytest.approx(1.0)]
    assert len(inner) == 2
    for line in inner:
        assert abs(line.signed_distance(Point(2, 0))) < 1e-9


def test_bitangent_lines_touching_disks():
    lines = bitangent_lines(Disk(Point(0, 0), 1.0), Disk(Point(1, 0), 1.0))
    triples = sorted((round(l.a, 6), round(l.b, 6), round(l.c, 6)) for l in lines)
    assert triples == [(0.0, 1.0, -1.0), (0.0, 1.0, 1.0)]


def test_bitangent_lines_concentric():
    assert bitangent_lines(Disk(Point(1, 1), 1.0), Disk(Point(1, 1), 2.0)) == []


@given(points, st.floats(min_value=0.2, max_value=5.0), points, st.floats(min_value=0.2, max_value=5.0))
@settings(deadline=None, max_examples=200)
def test_bitangent_lines_touch_both(c1, r1, c2, r2):
    sep = dist_point_point(c1, c2)
    if sep < 1e-3:
        return
    # Stay away from the tangency thresholds where the count flips.
    if abs(sep - (r1 + r2)) < 1e-3 or abs(sep - abs(r1 - r2)) < 1e-3:
        return
    lines = bitangent_lines(Disk(c1, r1), Disk(c2, r2))
    for line in lines:
        assert abs(abs(line.signed_distance(c1)) - r1) < 1e-6
        assert abs(abs(line.signed_distance(c2)) - r2) < 1e-6


def test_circle_segment_intersections_crossing():
    pts = circle_segment_intersections(Disk(Point(0, 0), 1.0), Segment(Point(-2, 0), Point(2, 0)))
    assert len(pts) == 2
    assert pts[0] == pytest.approx((-1.0, 0.0))
    assert pts[1] == pytest.approx((1.0, 0.0))


def test_circle_segment_intersections_tangent():
    pts = circle_segment_intersections(Disk(Point(0, 1), 1.0), Segment(Point(-2, 0), Point(2, 0)))
    assert len(pts) == 1
    assert pts[0] == pytest.approx((0.0, 0.0))


def test_circle_segment_intersections_clipping():
    # The segment stops inside the disk, so only the entry crossing remains.
    pts = circle_segment_intersections(Disk(Point(0, 0), 1.0), Segment(Point(-2, 0), Point(0, 0)))
    assert len(pts) == 1
    assert pts[0] == pytest.approx((-1.0, 0.0))


def test_circle_segment_intersections_degenerate_segment():
    on = circle_segment_intersections(Disk(Point(0, 0), 1.0), Segment(Point(1, 0), Point(1, 0)))
    assert on == [Point(1.0, 0.0)]
    off = circle_segment_intersections(Disk(Point(0, 0), 1.0), Segment(Point(2, 0), Point(2, 0)))
    assert off == []


@given(
    st.lists(points, min_size=1, max_size=8),
    st.lists(st.tuples(points, points), min_size=1, max_size=6),
)
@settings(deadline=None, max_examples=200)
def test_dist_points_to_segments_matches_scalar(pts, segs):
    arr = np.array(pts, dtype=float)
    p0 = np.array([s[0] for s in segs], dtype=float)
    p1 = np.array([s[1] for s in segs], dtype=float)
    mat = dist_points_to_segments(arr, p0, p1)
    assert mat.shape == (len(segs), len(pts))
    for k, (a, b) in enumerate(segs):
        for m, p in enumerate(pts):
            assert mat[k, m] == pytest.approx(dist_point_segment(p, Segment(a, b)), abs=1e-9)
