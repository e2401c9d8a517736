"""Grid brute-force references for desk-scale ground truth.

Both oracles restrict endpoints to a regular grid of on-curve sample
points, so their minima are upper bounds on the continuum optima: the
continuum searcher must never report more links than these do. Breadth-
first search gives the minimum link count; everything is index-ordered
so results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curve import CurvePoint, Polyline
from .dlc import Dlc, Simplification
from .geom import dist_points_to_segments, tolerance
from .links import Link, verify_simplification

CAPACITY = 2048


class CapacityError(Exception):
    """The sample grid is too large for brute force."""


@dataclass(frozen=True)
class GridSpec:
    samples_per_edge: int

    def __post_init__(self) -> None:
        if not isinstance(self.samples_per_edge, int) or self.samples_per_edge < 2:
            raise ValueError(f"samples_per_edge must be an integer >= 2, got {self.samples_per_edge!r}")


def _check_eps(eps: float) -> None:
    if not (isinstance(eps, (int, float)) and math.isfinite(eps) and eps > 0.0):
        raise ValueError(f"eps must be a positive finite number, got {eps!r}")


def grid_points(curve: Polyline, spec: GridSpec) -> list[CurvePoint]:
    """Canonical sample points: t = r/g on every edge plus the final vertex."""
    g = spec.samples_per_edge
    pts = [CurvePoint(e, r / g) for e in range(curve.num_edges) for r in range(g)]
    pts.append(curve.vertex_point(curve.n - 1))
    return pts


def _grid(curve: Polyline, eps: float, spec: GridSpec):
    _check_eps(eps)
    pts = grid_points(curve, spec)
    if len(pts) > CAPACITY:
        raise CapacityError(f"grid has {len(pts)} points; capacity is {CAPACITY}")
    xy = np.array([tuple(curve.embed(p)) for p in pts])
    edges = np.array([p.edge for p in pts])
    return pts, xy, edges


def _valid_matrix(curve: Polyline, xy: np.ndarray, edges: np.ndarray, eps: float) -> np.ndarray:
    """VALID[u, v] for u <= v: is the grid segment u->v a valid link.

    A vertex k constrains the segment unless it sits at or before the
    start's edge or strictly after the end's edge; the rest must lie
    within eps of the segment.
    """
    tol = tolerance()
    npts = len(xy)
    k_idx = np.arange(curve.n)
    valid = np.zeros((npts, npts), dtype=bool)
    for u in range(npts):
        ends = xy[u:]
        starts = np.broadcast_to(xy[u], ends.shape)
        close = dist_points_to_segments(curve.coords, starts, ends) <= eps + tol
        exempt = (k_idx[None, :] <= edges[u]) | (k_idx[None, :] > edges[u:, None])
        valid[u, u:] = (close | exempt).all(axis=1)
    return valid


def oracle_min_simplification(curve: Polyline, eps: float, spec: GridSpec) -> Simplification:
    """Minimum-link chain over grid points from first to last vertex.

    Every consecutive pair must be a valid link; breadth-first search over
    the (index-increasing) grid DAG finds the minimum number of segments.
    """
    pts, xy, edges = _grid(curve, eps, spec)
    valid = _valid_matrix(curve, xy, edges, eps)
    npts = len(pts)
    last = npts - 1
    pred = np.full(npts, -1, dtype=int)
    pred[0] = 0
    frontier = [0]
    while frontier and pred[last] == -1:
        nxt = []
        for u in frontier:
            mask = valid[u] & (pred == -1)
            mask[: u + 1] = False
            hits = np.nonzero(mask)[0]
            pred[hits] = u
            nxt.extend(hits.tolist())
        frontier = sorted(nxt)
    if pred[last] == -1:
        raise RuntimeError("grid search never reached the final vertex")
    path = [last]
    while path[-1] != 0:
        path.append(int(pred[path[-1]]))
    path.reverse()
    chain = [pts[v] for v in path]
    verified = verify_simplification(curve, chain, eps).passed
    return Simplification(chain=chain, epsilon=eps, dlc_size=None, verified=verified)


def oracle_dlc_reach(curve: Polyline, eps: float, spec: GridSpec):
    """Minimum chain size ending at each grid point, plus reconstruction data.

    Returns (points, levels, preds): levels[v] is the smallest number of
    links in any grid DLC (first link starting at the first vertex) whose
    last link ends at points[v], or None if unreachable; preds[v] is the
    (gap point, link start) pair that first achieved it.
    """
    pts, xy, edges = _grid(curve, eps, spec)
    valid = _valid_matrix(curve, xy, edges, eps)
    npts = len(pts)
    g = spec.samples_per_edge
    levels: list[int | None] = [None] * npts
    preds: list[tuple[int, int] | None] = [None] * npts
    seen = np.zeros(npts, dtype=bool)

    def run_end(u: int) -> int:
        return min((int(edges[u]) + 1) * g, npts - 1)

    frontier = []
    for v in np.nonzero(valid[0])[0]:
        levels[int(v)] = 1
        preds[int(v)] = (0, 0)
        frontier.append(int(v))
    seen[frontier] = True
    d = 1
    while frontier:
        starts: dict[int, int] = {}
        for u in frontier:
            for s in range(u, run_end(u) + 1):
                if s not in starts:
                    starts[s] = u
        nxt = []
        for s in sorted(starts):
            mask = valid[s] & ~seen
            mask[:s] = False
            hits = np.nonzero(mask)[0]
            for v in hits:
                levels[int(v)] = d + 1
                preds[int(v)] = (starts[s], s)
            seen[hits] = True
            nxt.extend(int(v) for v in hits)
        frontier = sorted(nxt)
        d += 1
    return pts, levels, preds


def oracle_min_dlc(curve: Polyline, eps: float, spec: GridSpec) -> Dlc:
    """Minimum-size DLC with all endpoints on grid points.

    The first link starts at the first vertex and the last link ends on
    the last edge; gaps stay on the point's own edge, stepping at most to
    the first sample of the next edge (still the same underlying edge).
    """
    pts, levels, preds = oracle_dlc_reach(curve, eps, spec)
    npts = len(pts)
    g = spec.samples_per_edge
    first_on_last_edge = (curve.num_edges - 1) * g
    best = None
    for v in range(first_on_last_edge, npts):
        if levels[v] is not None and (best is None or levels[v] < levels[best]):
            best = v
    if best is None:
        raise RuntimeError("grid search found no chain reaching the last edge")
    links: list[Link] = []
    v = best
    while True:
        u, s = preds[v]
        links.append(Link(pts[s], pts[v], eps))
        if levels[v] == 1:
            break
        v = u
    links.reverse()
    return Dlc(tuple(links))
