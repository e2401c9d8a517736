"""Link feasibility against a curve, and verification of whole chains.

A link is a straight segment between two points on the curve. It is valid
at error bound eps exactly when the segment meets the closed eps-disk
around every vertex strictly inside the spanned subcurve; by convexity of
point-to-segment distance this is equivalent to the directed Hausdorff
distance from the subcurve to the segment staying within eps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve import CurvePoint, Polyline, interior_vertices
from .geom import Disk, Segment, dist_point_segment, segment_intersects_disk, tolerance


@dataclass(frozen=True)
class Link:
    start: CurvePoint
    end: CurvePoint
    epsilon: float


def is_valid_link(curve: Polyline, x: CurvePoint, y: CurvePoint, eps: float) -> bool:
    """True when the segment from x to y is within eps of the subcurve it spans.

    Raises OrderError when x comes after y.
    """
    seg = Segment(curve.embed(x), curve.embed(y))
    tol = tolerance()
    for k in interior_vertices(curve, x, y):
        if not segment_intersects_disk(seg, Disk(curve.vertices[k], eps), tol):
            return False
    return True


def directed_hausdorff_to_segment(curve: Polyline, x: CurvePoint, y: CurvePoint) -> float:
    """Directed Hausdorff distance from the subcurve between x and y to segment xy.

    Equals the maximum over the span's endpoints (always zero) and interior
    vertices of the point-to-segment distance, since each piece of the
    subcurve is a segment whose points interpolate between those extremes.
    """
    seg = Segment(curve.embed(x), curve.embed(y))
    worst = 0.0
    for k in interior_vertices(curve, x, y):
        dist = dist_point_segment(curve.vertices[k], seg)
        if dist > worst:
            worst = dist
    return worst


@dataclass(frozen=True)
class LinkCheck:
    start: CurvePoint
    end: CurvePoint
    distance: float
    worst_vertex: int | None


@dataclass
class VerificationReport:
    epsilon: float
    links: list[LinkCheck] = field(default_factory=list)
    structural_errors: list[str] = field(default_factory=list)
    passed: bool = False

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "passed": self.passed,
            "structural_errors": list(self.structural_errors),
            "links": [
                {
                    "start": {"edge": c.start.edge, "t": c.start.t},
                    "end": {"edge": c.end.edge, "t": c.end.t},
                    "distance": c.distance,
                    "worst_vertex": c.worst_vertex,
                }
                for c in self.links
            ],
        }


def verify_simplification(curve: Polyline, chain: list[CurvePoint], eps: float) -> VerificationReport:
    """Check a chain of curve points as a simplification of the whole curve.

    Structural requirements: the chain starts at the first vertex, ends at
    the last, and is non-decreasing in curve order. Each consecutive pair is
    measured with the exact per-link distance; the report carries one row
    per link with the worst interior vertex.
    """
    report = VerificationReport(epsilon=eps)
    tol = tolerance()
    if len(chain) < 2:
        report.structural_errors.append("chain needs at least two points")
        return report
    try:
        pts = [curve.canonicalize(cp) for cp in chain]
    except ValueError as exc:
        report.structural_errors.append(f"invalid curve point: {exc}")
        return report
    if pts[0] != CurvePoint(0, 0.0):
        report.structural_errors.append(f"chain starts at {pts[0]}, not at the first vertex")
    last = curve.vertex_point(curve.n - 1)
    if pts[-1] != last:
        report.structural_errors.append(f"chain ends at {pts[-1]}, not at the last vertex")
    for a, b in zip(pts, pts[1:]):
        if a > b:
            report.structural_errors.append(f"chain goes backwards from {a} to {b}")
            return report
    worst_overall = 0.0
    for a, b in zip(pts, pts[1:]):
        seg = Segment(curve.embed(a), curve.embed(b))
        dist = 0.0
        worst: int | None = None
        for k in interior_vertices(curve, a, b):
            dk = dist_point_segment(curve.vertices[k], seg)
            if dk > dist:
                dist, worst = dk, k
        report.links.append(LinkCheck(a, b, dist, worst))
        worst_overall = max(worst_overall, dist)
    report.passed = not report.structural_errors and worst_overall <= eps + tol
    return report
