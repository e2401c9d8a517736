"""Deterministic SVG rendering of curves, neighbourhoods, and simplifications.

Output is plain text assembled in a fixed order with fixed-precision
coordinates, so identical inputs produce byte-identical files. The input
curve is drawn as one solid <line> per edge, eps-disks of the interior
vertices as translucent circles underneath, and a simplification as
dashed <line> segments with its endpoints marked.
"""

from __future__ import annotations

from .curve import CurvePoint, Polyline


def _fmt(v: float) -> str:
    return format(v + 0.0, ".4f")


def render_svg(
    curve: Polyline,
    chain: list[CurvePoint] | None = None,
    eps: float | None = None,
    show_disks: bool = False,
    stroke_scale: float = 1.0,
) -> str:
    if show_disks and eps is None:
        raise ValueError("show_disks needs an eps radius")
    xs = [p.x for p in curve.vertices]
    ys = [p.y for p in curve.vertices]
    pts = [curve.embed(cp) for cp in chain] if chain else []
    xs += [p.x for p in pts]
    ys += [p.y for p in pts]
    margin = (eps if eps is not None else 0.0) + 0.05 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    x0, y0 = min(xs) - margin, min(ys) - margin
    w, h = (max(xs) - min(xs)) + 2 * margin, (max(ys) - min(ys)) + 2 * margin
    stroke = 0.004 * max(w, h) * stroke_scale
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0)} {_fmt(-(y0 + h))} {_fmt(w)} {_fmt(h)}">'
    )
    out.append("<style>")
    out.append(f".curve {{ stroke: #35393d; stroke-width: {_fmt(stroke)}; stroke-linecap: round; }}")
    out.append(
        f".link {{ stroke: #c0392b; stroke-width: {_fmt(stroke)}; stroke-linecap: round; "
        f"stroke-dasharray: {_fmt(3 * stroke)} {_fmt(2 * stroke)}; }}"
    )
    out.append(".disk { fill: #8ab8d6; fill-opacity: 0.22; stroke: none; }")
    out.append(".node { fill: #c0392b; stroke: none; }")
    out.append("</style>")
    out.append('<g transform="matrix(1 0 0 -1 0 0)">')
    if show_disks:
        for k in range(1, curve.n - 1):
            c = curve.vertices[k]
            out.append(f'<circle class="disk" cx="{_fmt(c.x)}" cy="{_fmt(c.y)}" r="{_fmt(eps)}"/>')
    for e in range(curve.num_edges):
        a, b = curve.vertices[e], curve.vertices[e + 1]
        out.append(
            f'<line class="curve" x1="{_fmt(a.x)}" y1="{_fmt(a.y)}" x2="{_fmt(b.x)}" y2="{_fmt(b.y)}"/>'
        )
    for m in range(len(pts) - 1):
        a, b = pts[m], pts[m + 1]
        out.append(
            f'<line class="link" x1="{_fmt(a.x)}" y1="{_fmt(a.y)}" x2="{_fmt(b.x)}" y2="{_fmt(b.y)}"/>'
        )
    for p in pts:
        out.append(f'<circle class="node" cx="{_fmt(p.x)}" cy="{_fmt(p.y)}" r="{_fmt(1.6 * stroke)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
