"""Minimum disjoint link chains and the 2-approximate simplification.

A disjoint link chain (DLC) is an ordered sequence of valid links whose
2k endpoints are non-decreasing along the curve and whose consecutive
gaps each stay within a single edge. Every simplification induces a DLC
of the same size (consecutive links share an endpoint), so the minimum
DLC size k is a lower bound on the optimal link count; stitching the
minimum chain back together with on-curve connectors costs at most one
extra segment per link, giving at most 2k links total.

The chain itself comes from a table F indexed by (prefix vertex i, link
count d): the earliest point on edge i-1 at which the last of d disjoint
links can end, the first link starting exactly at the first vertex. Row
d only needs row d-1, because the next link must start on the edge where
the previous one ended (same-edge gaps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .candidates import min_endpoint_link, min_endpoint_link_fixed_start
from .curve import CurvePoint, Polyline
from .geom import Line, Point, tolerance
from .links import Link, directed_hausdorff_to_segment, is_valid_link, verify_simplification


@dataclass(frozen=True)
class Dlc:
    links: tuple[Link, ...]

    @property
    def size(self) -> int:
        return len(self.links)

    def validate(self, curve: Polyline) -> None:
        """Raise ValueError on any structural violation."""
        if not self.links:
            raise ValueError("empty link chain")
        first = curve.canonicalize(self.links[0].start)
        if first != CurvePoint(0, 0.0):
            raise ValueError(f"first link starts at {first}, not the first vertex")
        last_end = curve.canonicalize(self.links[-1].end)
        if curve.num_edges - 1 not in curve.edges_containing(last_end):
            raise ValueError(f"last link ends at {last_end}, not on the last edge")
        prev_end = None
        for r, link in enumerate(self.links):
            s = curve.canonicalize(link.start)
            e = curve.canonicalize(link.end)
            if curve.compare(s, e) > 0:
                raise ValueError(f"link {r} runs backwards: {s} > {e}")
            if prev_end is not None:
                if curve.compare(prev_end, s) > 0:
                    raise ValueError(f"link {r} starts before link {r - 1} ends")
                shared = set(curve.edges_containing(prev_end)) & set(curve.edges_containing(s))
                if not shared:
                    raise ValueError(f"gap between links {r - 1} and {r} spans more than one edge")
            if not is_valid_link(curve, s, e, link.epsilon):
                raise ValueError(f"link {r} is not a valid link at eps={link.epsilon}")
            prev_end = e


@dataclass
class DpTables:
    """F[(i, d)]: earliest end on edge i-1 of a d-link chain over the prefix
    through vertex i; L[(i, d)]: the last link of that chain and the
    predecessor prefix index (None for the base row)."""

    epsilon: float
    F: dict[tuple[int, int], CurvePoint] = field(default_factory=dict)
    L: dict[tuple[int, int], tuple[Link, int | None]] = field(default_factory=dict)


@dataclass
class Simplification:
    chain: list[CurvePoint]
    epsilon: float
    dlc_size: int | None
    verified: bool

    @property
    def link_count(self) -> int:
        return len(self.chain) - 1

    def to_document(self, curve: Polyline) -> dict:
        points = []
        for cp in self.chain:
            pt = curve.embed(cp)
            points.append({"edge": cp.edge, "t": cp.t, "x": pt.x, "y": pt.y})
        return {
            "epsilon": self.epsilon,
            "chain": points,
            "link_count": self.link_count,
            "dlc_size": self.dlc_size,
            "verified": self.verified,
        }


def _check_eps(eps: float) -> None:
    if not (isinstance(eps, (int, float)) and math.isfinite(eps) and eps > 0.0):
        raise ValueError(f"eps must be a positive finite number, got {eps!r}")


def _recheck(curve: Polyline, link: Link, eps: float) -> None:
    d = directed_hausdorff_to_segment(curve, link.start, link.end)
    if d > eps + tolerance():
        raise RuntimeError(f"table link {link.start}->{link.end} exceeds eps: {d} > {eps}")


def _on_edge(curve: Polyline, cp: CurvePoint, edge: int) -> bool:
    return edge in curve.edges_containing(cp)


def fill_tables(curve: Polyline, eps: float, max_links: int | None = None) -> DpTables:
    """Fill the earliest-end table for d = 1 .. max_links (default n-1).

    Base row: the first link starts exactly at the first vertex. Recurrence:
    row d extends some row d-1 cell j < i with the earliest-ending valid
    link from that cell's edge to edge i-1; a cell also inherits its own
    row d-1 value through a zero-length link, which keeps rows monotone.
    Cell values are kept as curve points, never re-derived from coordinates.
    """
    _check_eps(eps)
    n = curve.n
    max_d = n - 1 if max_links is None else min(max_links, n - 1)
    tables = DpTables(epsilon=eps)
    F, L = tables.F, tables.L
    memo: dict[tuple[CurvePoint, int], Link | None] = {}

    def mel(start: CurvePoint, end_edge: int) -> Link | None:
        key = (start, end_edge)
        if key not in memo:
            memo[key] = min_endpoint_link(curve, start, end_edge, eps)
        return memo[key]

    origin = curve.vertex_point(0)
    for i in range(1, n):
        link = min_endpoint_link_fixed_start(curve, origin, i - 1, eps)
        if link is None:
            continue
        _recheck(curve, link, eps)
        if not _on_edge(curve, link.end, i - 1):
            raise RuntimeError(f"base cell ({i}, 1) landed off edge {i - 1}: {link.end}")
        F[(i, 1)] = link.end
        L[(i, 1)] = (link, None)
    for d in range(2, max_d + 1):
        for i in range(1, n):
            cands: list[tuple[CurvePoint, int, Link]] = []
            for j in range(1, i):
                prev = F.get((j, d - 1))
                if prev is None:
                    continue
                link = mel(prev, i - 1)
                if link is not None:
                    cands.append((link.end, j, link))
            prev_same = F.get((i, d - 1))
            if prev_same is not None:
                cands.append((prev_same, i, Link(prev_same, prev_same, eps)))
            if not cands:
                continue
            end, j, link = min(cands, key=lambda c: (c[0], c[1]))
            _recheck(curve, link, eps)
            if not _on_edge(curve, end, i - 1):
                raise RuntimeError(f"cell ({i}, {d}) landed off edge {i - 1}: {end}")
            F[(i, d)] = end
            L[(i, d)] = (link, j)
    return tables


def min_dlc(curve: Polyline, eps: float) -> Dlc:
    """A minimum-size DLC whose first link starts at the first vertex.

    One always exists for eps > 0: zero-length links pivoting at each
    vertex form a chain, so cell (n-1, n-1) is never empty.
    """
    tables = fill_tables(curve, eps)
    n = curve.n
    d_min = None
    for d in range(1, n):
        if (n - 1, d) in tables.F:
            d_min = d
            break
    if d_min is None:
        raise RuntimeError("no reachable final cell; table fill is broken")
    links: list[Link] = []
    i, d = n - 1, d_min
    while True:
        link, j = tables.L[(i, d)]
        links.append(link)
        if j is None:
            break
        i, d = j, d - 1
    links.reverse()
    return Dlc(tuple(links))


def assemble(curve: Polyline, dlc: Dlc) -> Simplification:
    """Stitch a DLC into a simplification ending at the last vertex.

    The chain alternates link segments with connectors that run along a
    single edge (the shared gap edge), plus a final connector to the last
    vertex; consecutive duplicate points collapse, so a k-link DLC yields
    at most 2k segments.
    """
    dlc.validate(curve)
    eps = dlc.links[0].epsilon
    raw: list[CurvePoint] = []
    for link in dlc.links:
        raw.append(curve.canonicalize(link.start))
        raw.append(curve.canonicalize(link.end))
    raw.append(curve.vertex_point(curve.n - 1))
    chain = [raw[0]]
    for cp in raw[1:]:
        if cp != chain[-1]:
            chain.append(cp)
    k = dlc.size
    if len(chain) - 1 > 2 * k:
        raise RuntimeError(f"assembly produced {len(chain) - 1} links from a {k}-link chain")
    verified = verify_simplification(curve, chain, eps).passed
    return Simplification(chain=chain, epsilon=eps, dlc_size=k, verified=verified)


def merge_collinear(curve: Polyline, simp: Simplification) -> Simplification:
    """Drop chain points where consecutive segments continue the same line.

    A merged segment is a superset of the two it replaces (the middle
    point lies between its neighbours on the shared line), so point-to-
    segment distances can only shrink. Repeats until no point is droppable,
    then re-verifies.
    """
    tol = tolerance()
    pts = [curve.embed(cp) for cp in simp.chain]
    chain = list(simp.chain)
    changed = True
    while changed and len(chain) > 2:
        changed = False
        for m in range(1, len(chain) - 1):
            a, b, c = pts[m - 1], pts[m], pts[m + 1]
            if math.hypot(b.x - a.x, b.y - a.y) <= tol or math.hypot(c.x - b.x, c.y - b.y) <= tol:
                keep = False
            else:
                line = Line.through(a, b)
                keep = abs(line.signed_distance(c)) > tol
                if not keep:
                    forward = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y)
                    keep = forward < 0.0
            if not keep:
                del chain[m]
                del pts[m]
                changed = True
                break
    verified = verify_simplification(curve, chain, simp.epsilon).passed
    return Simplification(chain=chain, epsilon=simp.epsilon, dlc_size=simp.dlc_size, verified=verified)


def simplify_2approx(curve: Polyline, eps: float) -> Simplification:
    """Simplification with at most twice the optimal number of links.

    The DLC size k is a lower bound on any curve-restricted simplification
    of the same curve at the same eps, and the assembled output has at most
    2k links; the merge pass can only reduce the count further.
    """
    _check_eps(eps)
    dlc = min_dlc(curve, eps)
    simp = assemble(curve, dlc)
    merged = merge_collinear(curve, simp)
    if merged.link_count > 2 * dlc.size:
        raise RuntimeError("merge pass increased the link count")
    return merged
