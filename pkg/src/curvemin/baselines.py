"""Vertex-restricted reference simplifiers.

Douglas-Peucker recursively keeps the farthest-deviating vertex; it is
fast and popular but not optimal. The shortcut-graph method builds every
feasible vertex-to-vertex link and takes a breadth-first shortest path,
which is optimal among chains through input vertices. Both reuse the
link feasibility kernel so every distance in the package means the same
thing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curve import CurvePoint, Polyline
from .dlc import Simplification
from .geom import dist_points_to_segments, tolerance
from .links import verify_simplification


def _check_eps(eps: float) -> None:
    if not (isinstance(eps, (int, float)) and math.isfinite(eps) and eps > 0.0):
        raise ValueError(f"eps must be a positive finite number, got {eps!r}")


def douglas_peucker(curve: Polyline, eps: float) -> Simplification:
    """Recursive farthest-vertex split; keeps a subsequence of vertices.

    A range [lo, hi] is split at its farthest interior vertex when that
    vertex lies more than eps from segment lo->hi, ties going to the
    smallest index. Iterative worklist form so deep recursion on long
    curves is not a concern.
    """
    _check_eps(eps)
    coords = curve.coords
    keep = {0, curve.n - 1}
    stack = [(0, curve.n - 1)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        pts = coords[lo + 1 : hi]
        d = dist_points_to_segments(pts, coords[lo : lo + 1], coords[hi : hi + 1])[0]
        split = int(np.argmax(d))
        if d[split] > eps:
            k = lo + 1 + split
            keep.add(k)
            stack.append((k, hi))
            stack.append((lo, k))
    chain = [curve.vertex_point(k) for k in sorted(keep)]
    verified = verify_simplification(curve, chain, eps).passed
    return Simplification(chain=chain, epsilon=eps, dlc_size=None, verified=verified)


@dataclass
class ShortcutGraph:
    """Feasible vertex-to-vertex links: successors[i] lists every j > i
    such that segment vertex(i)->vertex(j) is a valid link."""

    n: int
    successors: list[list[int]]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.successors[i]


def build_shortcut_graph(curve: Polyline, eps: float) -> ShortcutGraph:
    _check_eps(eps)
    tol = tolerance()
    coords = curve.coords
    n = curve.n
    successors: list[list[int]] = []
    for i in range(n - 1):
        ends = coords[i + 1 :]
        starts = np.broadcast_to(coords[i], ends.shape)
        d = dist_points_to_segments(coords[i + 1 :], starts, ends)
        worst = np.maximum.accumulate(d, axis=1)
        feasible = np.diagonal(worst) <= eps + tol
        successors.append([i + 1 + r for r in range(n - 1 - i) if feasible[r]])
    successors.append([])
    return ShortcutGraph(n=n, successors=successors)


def imai_iri(curve: Polyline, eps: float) -> Simplification:
    """Minimum-link vertex-restricted simplification via the shortcut graph.

    Breadth-first search from the first to the last vertex; the first
    (smallest-index) discoverer of each node is kept, so reconstruction
    is deterministic.
    """
    graph = build_shortcut_graph(curve, eps)
    n = graph.n
    pred = [-1] * n
    pred[0] = 0
    frontier = [0]
    while frontier and pred[n - 1] == -1:
        nxt = []
        for u in frontier:
            for v in graph.successors[u]:
                if pred[v] == -1:
                    pred[v] = u
                    nxt.append(v)
        frontier = sorted(nxt)
    if pred[n - 1] == -1:
        raise RuntimeError("shortcut graph is missing its consecutive-vertex edges")
    path = [n - 1]
    while path[-1] != 0:
        path.append(pred[path[-1]])
    path.reverse()
    chain = [curve.vertex_point(k) for k in path]
    verified = verify_simplification(curve, chain, eps).passed
    return Simplification(chain=chain, epsilon=eps, dlc_size=None, verified=verified)
