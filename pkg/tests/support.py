"""Shared helpers for the test suite: fixture curves, random generators,
and brute-force references implemented independently of the library paths
they are meant to check."""

from __future__ import annotations

import itertools

import numpy as np

from curvemin import CurvePoint, Point, Polyline, dist_point_segment, tolerance
from curvemin.geom import dist_points_to_segments


def zigzag() -> Polyline:
    return Polyline([Point(0, 0), Point(1, 1), Point(2, 0), Point(3, 1), Point(4, 0)])


def straight(n: int = 4) -> Polyline:
    return Polyline([Point(float(i), 0.0) for i in range(n)])


def sawtooth() -> Polyline:
    """The committed wide-ratio fixture: 11 vertices at alternating tips."""
    return Polyline([Point(float(i), 0.9 if i % 2 == 0 else -0.9) for i in range(11)])


def wiggle() -> Polyline:
    """Non-monotone sub-link window: from the first vertex, the valid end
    window on edge 2 starts strictly inside the edge."""
    return Polyline([Point(0, 0), Point(5, -0.09), Point(10, 0.09), Point(20, -0.06)])


def random_walk_curve(rng: np.random.Generator, n: int, turn: float = 0.9) -> Polyline:
    headings = np.cumsum(rng.uniform(-turn, turn, size=n - 1))
    steps = np.stack([np.cos(headings), np.sin(headings)], axis=1)
    verts = np.vstack([[0.0, 0.0], np.cumsum(steps, axis=0)])
    return Polyline([Point(float(x), float(y)) for x, y in verts])


def random_span(rng: np.random.Generator, curve: Polyline) -> tuple[CurvePoint, CurvePoint]:
    """A canonical ordered pair of points on the curve."""
    ne = curve.num_edges
    e1, e2 = sorted(rng.integers(0, ne, size=2).tolist())
    t1 = float(rng.uniform(0.0, 1.0))
    t2 = float(rng.uniform(0.0, 1.0))
    if e1 == e2 and t2 < t1:
        t1, t2 = t2, t1
    x = curve.canonicalize(CurvePoint(int(e1), t1))
    y = curve.canonicalize(CurvePoint(int(e2), t2))
    if curve.compare(x, y) > 0:
        x, y = y, x
    return x, y


def brute_hausdorff(curve: Polyline, x: CurvePoint, y: CurvePoint, samples_per_edge: int = 1000) -> float:
    """Directed Hausdorff from the subcurve [x, y] to segment x->y by dense
    sampling; vertices are among the samples, so this never undershoots the
    vertex maximum."""
    x = curve.canonicalize(x)
    y = curve.canonicalize(y)
    a = np.array(tuple(curve.embed(x)))
    b = np.array(tuple(curve.embed(y)))
    pts = []
    for e in range(x.edge, y.edge + 1):
        lo = x.t if e == x.edge else 0.0
        hi = y.t if e == y.edge else 1.0
        if hi < lo:
            continue
        ts = np.linspace(lo, hi, samples_per_edge)
        p0 = np.array(tuple(curve.vertices[e]))
        p1 = np.array(tuple(curve.vertices[e + 1]))
        pts.append(p0 + ts[:, None] * (p1 - p0))
    if not pts:
        return 0.0
    samples = np.vstack(pts)
    return float(dist_points_to_segments(samples, a[None, :], b[None, :]).max())


def grid_best_link(curve: Polyline, start_lb: CurvePoint, end_edge: int, eps: float, g: int = 64):
    """Brute-force span oracle: earliest grid end on end_edge reachable by a
    valid link starting on start_lb's (truncated) edge, with the latest grid
    start for that end. Returns (start_t, end_t) or None. Independent of the
    candidate machinery: feasibility is checked against every spanned vertex
    directly."""
    tol = tolerance()
    i, t_lb = curve.canonicalize(start_lb)
    j = end_edge
    if j == i:
        return (t_lb, t_lb)
    sts = np.unique(np.concatenate([np.linspace(t_lb, 1.0, g + 1), [t_lb, 1.0]]))
    ets = np.linspace(0.0, 1.0, g + 1)
    vi, vi1 = np.array(tuple(curve.vertices[i])), np.array(tuple(curve.vertices[i + 1]))
    vj, vj1 = np.array(tuple(curve.vertices[j])), np.array(tuple(curve.vertices[j + 1]))
    starts = vi + sts[:, None] * (vi1 - vi)
    ends = vj + ets[:, None] * (vj1 - vj)
    p0 = np.repeat(starts, len(ets), axis=0)
    p1 = np.tile(ends, (len(sts), 1))
    centers = curve.coords[i + 1 : j + 1]
    ok = (dist_points_to_segments(centers, p0, p1) <= eps + tol).all(axis=1)
    ok = ok.reshape(len(sts), len(ets))
    best = None
    for c in range(len(ets)):
        rows = np.nonzero(ok[:, c])[0]
        if rows.size:
            best = (float(sts[rows[-1]]), float(ets[c]))
            break
    return best


def exhaustive_min_subsequence(curve: Polyline, eps: float) -> int:
    """Minimum link count over every vertex subsequence, by brute force."""
    tol = tolerance()
    n = curve.n
    coords = curve.coords

    def seg_ok(i: int, j: int) -> bool:
        for k in range(i + 1, j):
            if dist_point_segment(Point(*coords[k]), (Point(*coords[i]), Point(*coords[j]))) > eps + tol:
                return False
        return True

    best = n - 1
    interior = list(range(1, n - 1))
    for r in range(0, len(interior) + 1):
        if r + 1 >= best:
            break
        for combo in itertools.combinations(interior, r):
            path = [0, *combo, n - 1]
            if all(seg_ok(path[m], path[m + 1]) for m in range(len(path) - 1)):
                best = r + 1
                break
    return best
