"""Curve-restricted polyline simplification within a distance budget.

Simplification endpoints may slide anywhere along the input curve rather
than sitting on its vertices. The main entry point, simplify_2approx,
computes a minimum disjoint link chain by dynamic programming and stitches
it into a simplification with at most twice the optimal number of links
under the local directed Hausdorff distance. Vertex-restricted baselines,
a grid brute-force oracle, verification, and SVG rendering round out the
toolkit; the curvemin CLI drives all of it.
"""

from .baselines import ShortcutGraph, build_shortcut_graph, douglas_peucker, imai_iri
from .candidates import (
    AnchorPoint,
    CandidateLine,
    collect_anchors,
    enumerate_candidate_lines,
    min_endpoint_link,
    min_endpoint_link_fixed_start,
)
from .curve import CurvePoint, FormatError, OrderError, Polyline, interior_vertices, load_curve, save_curve
from .dlc import (
    Dlc,
    DpTables,
    Simplification,
    assemble,
    fill_tables,
    merge_collinear,
    min_dlc,
    simplify_2approx,
)
from .geom import (
    DEFAULT_TOLERANCE,
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
from .links import (
    Link,
    LinkCheck,
    VerificationReport,
    directed_hausdorff_to_segment,
    is_valid_link,
    verify_simplification,
)
from .oracle import (
    CapacityError,
    GridSpec,
    grid_points,
    oracle_dlc_reach,
    oracle_min_dlc,
    oracle_min_simplification,
)
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "AnchorPoint",
    "CandidateLine",
    "CapacityError",
    "CurvePoint",
    "DEFAULT_TOLERANCE",
    "Disk",
    "Dlc",
    "DpTables",
    "FormatError",
    "GridSpec",
    "Line",
    "Link",
    "LinkCheck",
    "OrderError",
    "Point",
    "Polyline",
    "Segment",
    "ShortcutGraph",
    "Simplification",
    "VerificationReport",
    "assemble",
    "bitangent_lines",
    "build_shortcut_graph",
    "circle_segment_intersections",
    "collect_anchors",
    "directed_hausdorff_to_segment",
    "dist_point_point",
    "dist_point_segment",
    "douglas_peucker",
    "enumerate_candidate_lines",
    "fill_tables",
    "grid_points",
    "imai_iri",
    "interior_vertices",
    "is_valid_link",
    "load_curve",
    "merge_collinear",
    "min_dlc",
    "min_endpoint_link",
    "min_endpoint_link_fixed_start",
    "oracle_dlc_reach",
    "oracle_min_dlc",
    "oracle_min_simplification",
    "render_svg",
    "save_curve",
    "segment_intersects_disk",
    "set_tolerance",
    "simplify_2approx",
    "tangent_lines_point_circle",
    "tolerance",
    "verify_simplification",
]
