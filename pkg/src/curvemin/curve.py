"""Polygonal curve model, points addressed along the curve, and curve I/O.

A curve point is the pair (edge, t) with t in [0, 1] interpolating along
that edge. Canonically a shared vertex is addressed on the later edge at
t=0, except the final vertex which stays at (last_edge, 1). Canonical pairs
compare lexicographically in curve order.
"""

from __future__ import annotations

import json
import math
import os
from typing import IO, Iterable, NamedTuple

import numpy as np

from .geom import Point, Segment, tolerance


class FormatError(ValueError):
    """A curve file could not be parsed."""


class OrderError(ValueError):
    """Two curve points violate a required order along the curve."""


class CurvePoint(NamedTuple):
    edge: int
    t: float


class Polyline:
    """Immutable polygonal curve with at least one edge.

    Consecutive duplicate vertices are rejected; collapse them at load time
    (load_curve does) before constructing.
    """

    __slots__ = ("vertices", "_coords", "_edge_lengths", "_arc_prefix")

    def __init__(self, vertices: Iterable[tuple[float, float]]):
        verts = tuple(Point(float(x), float(y)) for x, y in vertices)
        if len(verts) < 2:
            raise ValueError("a polyline needs at least two vertices")
        for p in verts:
            if not (math.isfinite(p.x) and math.isfinite(p.y)):
                raise ValueError(f"non-finite vertex {p}")
        tol = tolerance()
        for i in range(len(verts) - 1):
            if math.hypot(verts[i + 1].x - verts[i].x, verts[i + 1].y - verts[i].y) <= tol:
                raise ValueError(f"consecutive duplicate vertices at index {i}")
        self.vertices = verts
        self._coords = np.array(verts, dtype=float)
        diffs = self._coords[1:] - self._coords[:-1]
        self._edge_lengths = np.hypot(diffs[:, 0], diffs[:, 1])
        self._arc_prefix = np.concatenate(([0.0], np.cumsum(self._edge_lengths)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.vertices) - 1

    @property
    def coords(self) -> np.ndarray:
        return self._coords

    def edge(self, i: int) -> Segment:
        return Segment(self.vertices[i], self.vertices[i + 1])

    def edge_length(self, i: int) -> float:
        return float(self._edge_lengths[i])

    def vertex_point(self, k: int) -> CurvePoint:
        """The canonical curve point sitting at vertex k."""
        if not 0 <= k < self.n:
            raise ValueError(f"vertex index {k} out of range")
        if k == self.n - 1:
            return CurvePoint(self.num_edges - 1, 1.0)
        return CurvePoint(k, 0.0)

    def canonicalize(self, cp: CurvePoint) -> CurvePoint:
        edge, t = int(cp[0]), float(cp[1])
        if not 0 <= edge < self.num_edges:
            raise ValueError(f"edge index {edge} out of range for {self.num_edges} edges")
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"curve point parameter {t} outside [0, 1]")
        if t == 1.0 and edge < self.num_edges - 1:
            return CurvePoint(edge + 1, 0.0)
        return CurvePoint(edge, t)

    def embed(self, cp: CurvePoint) -> Point:
        edge, t = self.canonicalize(cp)
        a = self.vertices[edge]
        b = self.vertices[edge + 1]
        return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))

    def arc_position(self, cp: CurvePoint) -> float:
        edge, t = self.canonicalize(cp)
        return float(self._arc_prefix[edge] + t * self._edge_lengths[edge])

    def compare(self, a: CurvePoint, b: CurvePoint) -> int:
        """-1, 0, or +1 as a comes before, equals, or follows b in curve order."""
        ca = self.canonicalize(a)
        cb = self.canonicalize(b)
        if ca == cb:
            return 0
        return -1 if ca < cb else 1

    def edges_containing(self, cp: CurvePoint) -> tuple[int, ...]:
        """All edge indices the point geometrically lies on (1 or 2)."""
        edge, t = self.canonicalize(cp)
        if t == 0.0 and edge > 0:
            return (edge - 1, edge)
        return (edge,)

    def __repr__(self) -> str:
        return f"Polyline({self.n} vertices)"


def interior_vertices(curve: Polyline, x: CurvePoint, y: CurvePoint) -> range:
    """Vertex indices whose neighbourhoods a link from x to y must meet.

    For x on edge i and y on edge j (canonical, x <= y) the set is
    {i+1, ..., j}. Empty for a same-edge pair.
    """
    cx = curve.canonicalize(x)
    cy = curve.canonicalize(y)
    if cx > cy:
        raise OrderError(f"{x} comes after {y} in curve order")
    return range(cx.edge + 1, cy.edge + 1)


def _collapse_duplicates(points: list[Point]) -> list[Point]:
    tol = tolerance()
    out: list[Point] = []
    for p in points:
        if out and math.hypot(p.x - out[-1].x, p.y - out[-1].y) <= tol:
            continue
        out.append(p)
    return out


def _parse_csv(text: str) -> list[Point]:
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'x,y', got {raw!r}")
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
        if not (math.isfinite(x) and math.isfinite(y)):
            raise FormatError(f"line {lineno}: non-finite coordinate")
        points.append(Point(x, y))
    return points


def _parse_geojson(text: str) -> list[Point]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    geometry = obj
    if isinstance(obj, dict) and obj.get("type") == "FeatureCollection":
        features = obj.get("features", [])
        if len(features) != 1:
            raise FormatError(f"expected exactly one feature, found {len(features)}")
        geometry = features[0]
    if isinstance(geometry, dict) and geometry.get("type") == "Feature":
        geometry = geometry.get("geometry")
    if not isinstance(geometry, dict) or geometry.get("type") != "LineString":
        kind = geometry.get("type") if isinstance(geometry, dict) else type(geometry).__name__
        raise FormatError(f"expected a LineString geometry, found {kind!r}")
    coords = geometry.get("coordinates")
    if not isinstance(coords, list):
        raise FormatError("LineString has no coordinate array")
    points = []
    for idx, pair in enumerate(coords):
        if not isinstance(pair, (list, tuple)) or len(pair) < 2:
            raise FormatError(f"coordinate {idx}: expected [x, y]")
        try:
            x, y = float(pair[0]), float(pair[1])
        except (TypeError, ValueError) as exc:
            raise FormatError(f"coordinate {idx}: {exc}") from exc
        if not (math.isfinite(x) and math.isfinite(y)):
            raise FormatError(f"coordinate {idx}: non-finite value")
        points.append(Point(x, y))
    return points


def _infer_format(name: str) -> str:
    ext = os.path.splitext(name)[1].lower()
    if ext == ".csv":
        return "csv"
    if ext in (".json", ".geojson"):
        return "geojson"
    raise FormatError(f"cannot infer curve format from {name!r}; pass fmt explicitly")


def load_curve(source: str | os.PathLike | IO, fmt: str | None = None) -> Polyline:
    """Load a curve from CSV (one 'x,y' per line, '#' comments) or GeoJSON.

    Consecutive duplicate vertices are collapsed; fewer than two distinct
    vertices is an error.
    """
    if hasattr(source, "read"):
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data
        if fmt is None:
            name = getattr(source, "name", "")
            fmt = _infer_format(name) if name else "csv"
    else:
        with open(source, "rb") as fh:
            text = fh.read().decode("utf-8")
        if fmt is None:
            fmt = _infer_format(os.fspath(source))
    if fmt == "csv":
        points = _parse_csv(text)
    elif fmt == "geojson":
        points = _parse_geojson(text)
    else:
        raise FormatError(f"unknown curve format {fmt!r}")
    points = _collapse_duplicates(points)
    if len(points) < 2:
        raise ValueError("curve has fewer than two distinct vertices")
    return Polyline(points)


def save_curve(curve: Polyline, dest: str | os.PathLike | IO, fmt: str | None = None) -> None:
    """Write a curve as CSV or GeoJSON; float repr keeps round-trips exact."""
    if fmt is None:
        name = dest if isinstance(dest, (str, os.PathLike)) else getattr(dest, "name", "")
        fmt = _infer_format(os.fspath(name)) if name else "csv"
    if fmt == "csv":
        text = "".join(f"{p.x!r},{p.y!r}\n" for p in curve.vertices)
    elif fmt == "geojson":
        doc = {
            "type": "Feature",
            "geometry": {
                "type": "LineString",
                "coordinates": [[p.x, p.y] for p in curve.vertices],
            },
            "properties": {},
        }
        text = json.dumps(doc, sort_keys=True) + "\n"
    else:
        raise FormatError(f"unknown curve format {fmt!r}")
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)
