"""Candidate supporting lines and minimal-endpoint link search.

A link with the earliest possible end point can always be realized on a
line pinned by two active constraints: tangency to a vertex neighbourhood,
incidence with a terminal-edge endpoint, or incidence with a point where a
neighbourhood circle crosses a terminal edge. Enumerating every line of
that form gives a finite superset of the extremal candidates; each is
clipped to the two edges and kept only if the clipped segment is a valid
link. The grid-oracle test suite guards this sufficiency claim empirically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curve import CurvePoint, OrderError, Polyline
from .geom import (
    Disk,
    Line,
    Point,
    Segment,
    circle_segment_intersections,
    dist_points_to_segments,
    tangent_lines_point_circle,
    bitangent_lines,
    tolerance,
)
from .links import Link, is_valid_link


@dataclass(frozen=True)
class AnchorPoint:
    """A point a candidate line may be required to pass through.

    origin is one of "start-bound", "edge-endpoint", "disk-crossing";
    vertex is the disk's vertex index for crossings, else None. edge/t
    locate the anchor on its terminal edge (full-edge parameter).
    """

    location: Point
    origin: str
    vertex: int | None
    edge: int
    t: float


@dataclass(frozen=True)
class CandidateLine:
    line: Line
    provenance: tuple


def collect_anchors(curve: Polyline, start_lb: CurvePoint, end_edge: int, eps: float) -> list[AnchorPoint]:
    """Anchors for the span from start_lb's edge (truncated at start_lb) to end_edge.

    Endpoints of the truncated start edge and of the end edge, plus every
    point where an interior vertex's eps-circle crosses either of those two
    (truncated) edges. A same-edge span has no interior vertices, so only
    the two truncation endpoints are returned.
    """
    i, t_lb = curve.canonicalize(start_lb)
    j = int(end_edge)
    if not 0 <= j < curve.num_edges:
        raise ValueError(f"end edge {j} out of range")
    if j < i:
        raise OrderError(f"end edge {j} precedes start edge {i}")
    start_pt = curve.embed(CurvePoint(i, t_lb))
    vi1 = curve.vertices[i + 1]
    anchors = [
        AnchorPoint(start_pt, "start-bound", None, i, t_lb),
        AnchorPoint(vi1, "edge-endpoint", None, i, 1.0),
    ]
    if j == i:
        return anchors
    vj, vj1 = curve.vertices[j], curve.vertices[j + 1]
    anchors.append(AnchorPoint(vj, "edge-endpoint", None, j, 0.0))
    anchors.append(AnchorPoint(vj1, "edge-endpoint", None, j, 1.0))
    start_seg = Segment(start_pt, vi1)
    end_seg = curve.edge(j)
    for k in range(i + 1, j + 1):
        disk = Disk(curve.vertices[k], eps)
        for pt in circle_segment_intersections(disk, start_seg):
            anchors.append(AnchorPoint(pt, "disk-crossing", k, i, _edge_param(curve, i, pt)))
        for pt in circle_segment_intersections(disk, end_seg):
            anchors.append(AnchorPoint(pt, "disk-crossing", k, j, _edge_param(curve, j, pt)))
    return anchors


def enumerate_candidate_lines(
    curve: Polyline,
    start_lb: CurvePoint,
    end_edge: int,
    eps: float,
    anchors: list[AnchorPoint] | None = None,
) -> list[CandidateLine]:
    """Finite candidate superset for extremal links over the given span.

    Three classes: common tangents of interior-disk pairs, tangents from
    each anchor to each interior disk, and lines through each anchor pair.
    Deduplicated on the canonical triple and sorted for determinism.
    """
    i, _ = curve.canonicalize(start_lb)
    j = int(end_edge)
    if anchors is None:
        anchors = collect_anchors(curve, start_lb, end_edge, eps)
    tol = tolerance()
    disks = [(k, Disk(curve.vertices[k], eps)) for k in range(i + 1, j + 1)]
    found: dict[tuple, CandidateLine] = {}

    def add(line: Line, provenance: tuple) -> None:
        key = (round(line.a, 12), round(line.b, 12), round(line.c, 12))
        if key not in found:
            found[key] = CandidateLine(line, provenance)

    for a in range(len(disks)):
        for b in range(a + 1, len(disks)):
            ka, da = disks[a]
            kb, db = disks[b]
            for line in bitangent_lines(da, db):
                add(line, ("bitangent", ka, kb))
    for anchor in anchors:
        for k, disk in disks:
            for line in tangent_lines_point_circle(anchor.location, disk):
                add(line, ("point-tangent", anchor, k))
    for a in range(len(anchors)):
        for b in range(a + 1, len(anchors)):
            pa, pb = anchors[a].location, anchors[b].location
            if math.hypot(pa.x - pb.x, pa.y - pb.y) <= tol:
                continue
            add(Line.through(pa, pb), ("two-anchors", anchors[a], anchors[b]))
    return sorted(found.values(), key=lambda c: (c.line.a, c.line.b, c.line.c))


def min_endpoint_link(curve: Polyline, start_lb: CurvePoint, end_edge: int, eps: float) -> Link | None:
    """Valid link ending earliest on end_edge, starting on start_lb's edge at or after it.

    A same-edge request degenerates to the zero-length link at start_lb
    (any sub-segment of an edge is a valid link). Ties on the minimal end
    prefer the latest start, then the smallest canonical line triple.
    Returns None when no admissible valid link exists.
    """
    _check_eps(eps)
    start_lb = curve.canonicalize(start_lb)
    i, t_lb = start_lb
    j = _check_end_edge(curve, i, end_edge)
    if j == i:
        return Link(start_lb, start_lb, eps)
    anchors = collect_anchors(curve, start_lb, j, eps)
    cands = enumerate_candidate_lines(curve, start_lb, j, eps, anchors=anchors)
    end_ts = sorted({0.0, 1.0} | {a.t for a in anchors if a.edge == j})
    return _best_link(curve, eps, i, t_lb, j, cands, None, end_ts)


def min_endpoint_link_fixed_start(curve: Polyline, start: CurvePoint, end_edge: int, eps: float) -> Link | None:
    """As min_endpoint_link, but the link must start exactly at start."""
    _check_eps(eps)
    start = curve.canonicalize(start)
    i, t_s = start
    j = _check_end_edge(curve, i, end_edge)
    if j == i:
        return Link(start, start, eps)
    anchors = collect_anchors(curve, start, j, eps)
    start_pt = curve.embed(start)
    start_anchor = anchors[0]
    tol = tolerance()
    found: dict[tuple, CandidateLine] = {}

    def add(line: Line, provenance: tuple) -> None:
        key = (round(line.a, 12), round(line.b, 12), round(line.c, 12))
        if key not in found:
            found[key] = CandidateLine(line, provenance)

    for k in range(i + 1, j + 1):
        for line in tangent_lines_point_circle(start_pt, Disk(curve.vertices[k], eps)):
            add(line, ("point-tangent", start_anchor, k))
    for anchor in anchors:
        if anchor.edge != j:
            continue
        if math.hypot(anchor.location.x - start_pt.x, anchor.location.y - start_pt.y) <= tol:
            continue
        add(Line.through(start_pt, anchor.location), ("two-anchors", start_anchor, anchor))
    cands = sorted(found.values(), key=lambda c: (c.line.a, c.line.b, c.line.c))
    end_ts = sorted({0.0, 1.0} | {a.t for a in anchors if a.edge == j})
    return _best_link(curve, eps, i, t_s, j, cands, t_s, end_ts)


def _check_eps(eps: float) -> None:
    if not (isinstance(eps, (int, float)) and math.isfinite(eps) and eps > 0.0):
        raise ValueError(f"eps must be a positive finite number, got {eps!r}")


def _check_end_edge(curve: Polyline, start_edge: int, end_edge: int) -> int:
    j = int(end_edge)
    if not 0 <= j < curve.num_edges:
        raise ValueError(f"end edge {j} out of range")
    if j < start_edge:
        raise OrderError(f"end edge {j} precedes start edge {start_edge}")
    return j


def _edge_param(curve: Polyline, edge: int, pt: Point) -> float:
    a = curve.vertices[edge]
    b = curve.vertices[edge + 1]
    dx, dy = b.x - a.x, b.y - a.y
    t = ((pt.x - a.x) * dx + (pt.y - a.y) * dy) / (dx * dx + dy * dy)
    return min(1.0, max(0.0, t))


def _clip_edge(abc: np.ndarray, a: np.ndarray, b: np.ndarray, lo: float, length: float, tol: float):
    """Clip every line against one edge; returns (t, ok, collinear) arrays.

    t is the full-edge parameter, clamped to [lo, 1] and snapped to exact
    endpoint values within tolerance. ok marks transversal or endpoint hits
    inside the admissible range; collinear rows need the scalar path.
    """
    da = abc[:, 0] * a[0] + abc[:, 1] * a[1] + abc[:, 2]
    db = abc[:, 0] * b[0] + abc[:, 1] * b[1] + abc[:, 2]
    near_a = np.abs(da) <= tol
    near_b = np.abs(db) <= tol
    col = near_a & near_b
    denom = da - db
    with np.errstate(divide="ignore", invalid="ignore"):
        t_raw = np.where(denom != 0.0, da / denom, np.nan)
    t = np.where(
        near_a & ~near_b,
        0.0,
        np.where(near_b & ~near_a, 1.0, np.where(da * db < 0.0, t_raw, np.nan)),
    )
    t_tol = tol / length
    ok = ~col & ~np.isnan(t) & (t >= lo - t_tol) & (t <= 1.0 + t_tol)
    t = np.where(np.abs(t - 1.0) <= t_tol, 1.0, t)
    t = np.where(np.abs(t) <= t_tol, 0.0, t)
    with np.errstate(invalid="ignore"):
        t = np.clip(t, lo, 1.0)
    return t, ok, col


def _best_link(
    curve: Polyline,
    eps: float,
    i: int,
    t_lb: float,
    j: int,
    cands: list[CandidateLine],
    fixed_t: float | None,
    end_anchor_ts: list[float],
) -> Link | None:
    if not cands:
        return None
    tol = tolerance()
    abc = np.array([(c.line.a, c.line.b, c.line.c) for c in cands], dtype=float)
    V = curve.coords
    if fixed_t is None:
        ts, ok_s, col_s = _clip_edge(abc, V[i], V[i + 1], t_lb, curve.edge_length(i), tol)
    else:
        ts = np.full(len(cands), fixed_t)
        ok_s = np.ones(len(cands), dtype=bool)
        col_s = np.zeros(len(cands), dtype=bool)
    te, ok_e, col_e = _clip_edge(abc, V[j], V[j + 1], 0.0, curve.edge_length(j), tol)

    rows: list[tuple[float, float, tuple, int]] = []
    vector = ok_s & ok_e
    idxs = np.nonzero(vector)[0]
    if idxs.size:
        p0 = V[i] + ts[idxs, None] * (V[i + 1] - V[i])
        p1 = V[j] + te[idxs, None] * (V[j + 1] - V[j])
        centers = V[i + 1 : j + 1]
        feas = (dist_points_to_segments(centers, p0, p1) <= eps + tol).all(axis=1)
        for pos, idx in enumerate(idxs):
            if feas[pos]:
                rows.append((float(te[idx]), float(ts[idx]), tuple(abc[idx]), int(idx)))

    # Lines running along a terminal edge need explicit point checks: a
    # collinear end edge admits many end points on the same line, and a
    # collinear start edge allows either truncation endpoint as the start.
    scalar = np.nonzero(col_s | col_e)[0]
    for idx in scalar:
        if col_s[idx]:
            start_ts = [t_lb, 1.0]
        elif ok_s[idx]:
            start_ts = [float(ts[idx])]
        else:
            continue
        if col_e[idx]:
            cand_ends = end_anchor_ts
        elif ok_e[idx]:
            cand_ends = [float(te[idx])]
        else:
            continue
        hit = None
        for t_end in cand_ends:
            for t_start in start_ts:
                x = curve.canonicalize(CurvePoint(i, t_start))
                y = curve.canonicalize(CurvePoint(j, t_end))
                if is_valid_link(curve, x, y, eps):
                    hit = (t_end, t_start)
                    break
            if hit:
                break
        if hit:
            rows.append((hit[0], hit[1], tuple(abc[idx]), int(idx)))

    if not rows:
        return None
    best_te, best_ts, _, _ = min(rows, key=lambda r: (r[0], -r[1], r[2]))
    if fixed_t is None and best_ts < 1.0:
        # A later start with the same end leaves more room for the next gap;
        # the far truncation endpoint is the only start that can improve.
        x = curve.canonicalize(CurvePoint(i, 1.0))
        y = curve.canonicalize(CurvePoint(j, best_te))
        if x <= y and is_valid_link(curve, x, y, eps):
            best_ts = 1.0
    start = curve.canonicalize(CurvePoint(i, best_ts))
    end = curve.canonicalize(CurvePoint(j, best_te))
    return Link(start, end, eps)
