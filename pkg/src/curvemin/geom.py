"""Planar geometry kernel: points, segments, lines in normal form, disks.

Boundary comparisons are closed and use an absolute tolerance, so tangency
configurations (which the link construction produces on purpose) classify
consistently across operations.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

DEFAULT_TOLERANCE = 1e-9

# Sign threshold used only to pick the canonical orientation of a line whose
# normal is numerically axis-aligned.
_SIGN_EPS = 1e-12

_tolerance = DEFAULT_TOLERANCE


def tolerance() -> float:
    """Absolute tolerance applied to containment and tangency tests."""
    return _tolerance


def set_tolerance(value: float) -> float:
    """Set the global tolerance; returns the previous value."""
    global _tolerance
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"tolerance must be a positive finite number, got {value!r}")
    previous = _tolerance
    _tolerance = value
    return previous


class Point(NamedTuple):
    x: float
    y: float


class Segment(NamedTuple):
    a: Point
    b: Point


class Disk(NamedTuple):
    """Closed disk."""

    center: Point
    radius: float


class Line(NamedTuple):
    """Line a*x + b*y + c = 0 with a^2 + b^2 = 1, first nonzero of (a, b) positive.

    Build through the classmethods so the triple is canonical; two
    constructions of the same geometric line then compare equal up to
    floating error.
    """

    a: float
    b: float
    c: float

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float) -> "Line":
        norm = math.hypot(a, b)
        if norm <= _SIGN_EPS:
            raise ValueError("degenerate line: zero normal vector")
        a, b, c = a / norm, b / norm, c / norm
        if a < -_SIGN_EPS or (abs(a) <= _SIGN_EPS and b < 0.0):
            a, b, c = -a, -b, -c
        return cls(a, b, c)

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        # Normal is the edge direction rotated a quarter turn.
        return cls.from_coefficients(q[1] - p[1], p[0] - q[0], q[0] * p[1] - p[0] * q[1])

    def signed_distance(self, p: Point) -> float:
        return self.a * p[0] + self.b * p[1] + self.c


def dist_point_point(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def dist_point_segment(p: Point, s: Segment) -> float:
    """Euclidean distance from p to the closed segment s."""
    ax, ay = s[0]
    bx, by = s[1]
    dx, dy = bx - ax, by - ay
    denom = dx * dx + dy * dy
    if denom == 0.0:
        return math.hypot(p[0] - ax, p[1] - ay)
    t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / denom
    if t <= 0.0:
        return math.hypot(p[0] - ax, p[1] - ay)
    if t >= 1.0:
        return math.hypot(p[0] - bx, p[1] - by)
    return math.hypot(p[0] - (ax + t * dx), p[1] - (ay + t * dy))


def segment_intersects_disk(s: Segment, d: Disk, tol: float | None = None) -> bool:
    """True when the closed segment meets the closed disk (within tolerance)."""
    if tol is None:
        tol = _tolerance
    return dist_point_segment(d.center, s) <= d.radius + tol


def line_segment_intersection(line: Line, s: Segment, tol: float | None = None) -> Point | None:
    """Intersection point of a line with a closed segment.

    Conventions: a transversal crossing returns the crossing point; touching
    only an endpoint returns that endpoint; a segment lying on the line
    returns s.a; no intersection returns None.
    """
    t = line_segment_intersection_param(line, s, tol)
    if t is None:
        return None
    ax, ay = s[0]
    bx, by = s[1]
    return Point(ax + t * (bx - ax), ay + t * (by - ay))


def line_segment_intersection_param(line: Line, s: Segment, tol: float | None = None) -> float | None:
    """Same as line_segment_intersection but returns the parameter along s.

    The collinear (segment-on-line) convention maps to t=0.
    """
    if tol is None:
        tol = _tolerance
    da = line.signed_distance(s[0])
    db = line.signed_distance(s[1])
    on_a = abs(da) <= tol
    on_b = abs(db) <= tol
    if on_a:
        return 0.0
    if on_b:
        return 1.0
    if (da > 0.0) == (db > 0.0):
        return None
    return da / (da - db)


def tangent_lines_point_circle(p: Point, d: Disk, tol: float | None = None) -> list[Line]:
    """Lines through p tangent to the circle bounding d.

    Zero lines when p is strictly inside, one when p is on the boundary
    (within tolerance), two when p is outside.
    """
    if tol is None:
        tol = _tolerance
    if d.radius <= 0.0:
        raise ValueError("tangents require a positive radius")
    wx = d.center[0] - p[0]
    wy = d.center[1] - p[1]
    dist = math.hypot(wx, wy)
    if dist < d.radius - tol:
        return []
    ux, uy = wx / dist, wy / dist
    if dist <= d.radius + tol:
        # p sits on the boundary: single tangent, normal toward the center.
        return [Line.from_coefficients(ux, uy, -(ux * p[0] + uy * p[1]))]
    k = d.radius / dist
    m = math.sqrt(max(0.0, 1.0 - k * k))
    lines = []
    for sgn in (1.0, -1.0):
        nx = k * ux + sgn * m * -uy
        ny = k * uy + sgn * m * ux
        lines.append(Line.from_coefficients(nx, ny, -(nx * p[0] + ny * p[1])))
    return _dedup_lines(lines)


def bitangent_lines(d1: Disk, d2: Disk, tol: float | None = None) -> list[Line]:
    """Common tangent lines of two circles (up to four).

    Concentric circles are returned as an empty list: with equal radii the
    family is infinite, with distinct radii it is empty, and neither case
    yields a usable finite candidate.
    """
    if tol is None:
        tol = _tolerance
    wx = d2.center[0] - d1.center[0]
    wy = d2.center[1] - d1.center[1]
    dist = math.hypot(wx, wy)
    if dist <= tol:
        return []
    ux, uy = wx / dist, wy / dist
    lines = []
    # Signed tangency targets: same-side pair gives the outer tangents,
    # opposite-side pair the inner ones. The remaining sign pairs are global
    # flips of these and would canonicalize to the same triples.
    for s2 in (1.0, -1.0):
        v = s2 * d2.radius - d1.radius
        if abs(v) > dist + tol:
            continue
        k = max(-1.0, min(1.0, v / dist))
        m = math.sqrt(max(0.0, 1.0 - k * k))
        for sgn in (1.0, -1.0):
            nx = k * ux + sgn * m * -uy
            ny = k * uy + sgn * m * ux
            c = d1.radius - (nx * d1.center[0] + ny * d1.center[1])
            lines.append(Line.from_coefficients(nx, ny, c))
            if m == 0.0:
                break
    return _dedup_lines(lines)


def circle_segment_intersections(d: Disk, s: Segment, tol: float | None = None) -> list[Point]:
    """Points of the closed segment at distance d.radius from d.center.

    Sorted by parameter along the segment; tangency (within tolerance)
    yields a single point.
    """
    if tol is None:
        tol = _tolerance
    ax, ay = s[0]
    bx, by = s[1]
    cx, cy = d.center
    ux, uy = bx - ax, by - ay
    len2 = ux * ux + uy * uy
    if len2 == 0.0:
        if abs(math.hypot(ax - cx, ay - cy) - d.radius) <= tol:
            return [Point(ax, ay)]
        return []
    ex, ey = ax - cx, ay - cy
    half_b = ux * ex + uy * ey
    cq = ex * ex + ey * ey - d.radius * d.radius
    quarter_disc = half_b * half_b - len2 * cq
    # quarter_disc = len2 * (r^2 - h^2) with h the line-to-center distance,
    # so this threshold is |h - r| <= tol expressed without the square root.
    thresh = len2 * tol * (2.0 * d.radius + tol)
    if quarter_disc < -thresh:
        return []
    t_tol = tol / math.sqrt(len2)
    if quarter_disc <= thresh:
        ts = [-half_b / len2]
    else:
        root = math.sqrt(quarter_disc)
        ts = [(-half_b - root) / len2, (-half_b + root) / len2]
    out = []
    for t in ts:
        if -t_tol <= t <= 1.0 + t_tol:
            t = min(1.0, max(0.0, t))
            out.append(Point(ax + t * ux, ay + t * uy))
    return out


def dist_points_to_segments(points: np.ndarray, p0: np.ndarray, p1: np.ndarray) -> np.ndarray:
    """Distances from each of m points to each of K segments, shape (K, m).

    Vectorized companion of dist_point_segment for the batch evaluations in
    candidate scoring and the grid oracles.
    """
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    p0 = np.asarray(p0, dtype=float).reshape(-1, 2)
    p1 = np.asarray(p1, dtype=float).reshape(-1, 2)
    d = p1 - p0  # (K, 2)
    denom = np.einsum("ij,ij->i", d, d)  # (K,)
    rel = points[None, :, :] - p0[:, None, :]  # (K, m, 2)
    dot = np.einsum("kmj,kj->km", rel, d)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = dot / denom[:, None]
    t = np.where(denom[:, None] > 0.0, t, 0.0)
    np.clip(t, 0.0, 1.0, out=t)
    foot = p0[:, None, :] + t[:, :, None] * d[:, None, :]
    diff = points[None, :, :] - foot
    return np.sqrt(np.einsum("kmj,kmj->km", diff, diff))


def _dedup_lines(lines: list[Line]) -> list[Line]:
    seen = {}
    for line in lines:
        key = (round(line.a, 12), round(line.b, 12), round(line.c, 12))
        if key not in seen:
            seen[key] = line
    return list(seen.values())
