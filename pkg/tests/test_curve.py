import io
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvemin import CurvePoint, FormatError, OrderError, Point, Polyline, interior_vertices, load_curve, save_curve

from support import random_walk_curve, zigzag

import numpy as np


def test_polyline_rejects_short_and_duplicate():
    with pytest.raises(ValueError):
        Polyline([Point(0, 0)])
    with pytest.raises(ValueError):
        Polyline([Point(0, 0), Point(0, 0), Point(1, 0)])
    with pytest.raises(ValueError):
        Polyline([Point(0, 0), Point(math.inf, 0)])


def test_basic_measures():
    c = zigzag()
    assert c.n == 5
    assert c.num_edges == 4
    assert c.edge_length(0) == pytest.approx(math.sqrt(2))
    assert c.coords.shape == (5, 2)


def test_canonicalize_moves_shared_vertices_forward():
    c = zigzag()
    assert c.canonicalize(CurvePoint(0, 1.0)) == CurvePoint(1, 0.0)
    assert c.canonicalize(CurvePoint(3, 1.0)) == CurvePoint(3, 1.0)
    assert c.canonicalize(CurvePoint(2, 0.25)) == CurvePoint(2, 0.25)
    with pytest.raises(ValueError):
        c.canonicalize(CurvePoint(4, 0.0))
    with pytest.raises(ValueError):
        c.canonicalize(CurvePoint(0, 1.5))


def test_vertex_point():
    c = zigzag()
    assert c.vertex_point(0) == CurvePoint(0, 0.0)
    assert c.vertex_point(2) == CurvePoint(2, 0.0)
    assert c.vertex_point(4) == CurvePoint(3, 1.0)
    with pytest.raises(ValueError):
        c.vertex_point(5)


def test_embed_and_arc_position():
    c = zigzag()
    assert c.embed(CurvePoint(1, 0.5)) == pytest.approx((1.5, 0.5))
    assert c.arc_position(CurvePoint(0, 0.0)) == 0.0
    assert c.arc_position(CurvePoint(1, 0.0)) == pytest.approx(math.sqrt(2))
    assert c.arc_position(CurvePoint(0, 1.0)) == c.arc_position(CurvePoint(1, 0.0))
    assert c.arc_position(CurvePoint(3, 1.0)) == pytest.approx(4 * math.sqrt(2))


def test_compare_handles_aliases():
    c = zigzag()
    assert c.compare(CurvePoint(0, 1.0), CurvePoint(1, 0.0)) == 0
    assert c.compare(CurvePoint(0, 0.5), CurvePoint(2, 0.0)) == -1
    assert c.compare(CurvePoint(3, 0.5), CurvePoint(1, 0.5)) == 1


def test_edges_containing():
    c = zigzag()
    assert c.edges_containing(CurvePoint(1, 0.0)) == (0, 1)
    assert c.edges_containing(CurvePoint(0, 1.0)) == (0, 1)
    assert c.edges_containing(CurvePoint(0, 0.0)) == (0,)
    assert c.edges_containing(CurvePoint(2, 0.4)) == (2,)
    assert c.edges_containing(CurvePoint(3, 1.0)) == (3,)


def test_interior_vertices():
    c = zigzag()
    assert list(interior_vertices(c, CurvePoint(0, 0.5), CurvePoint(2, 0.5))) == [1, 2]
    assert list(interior_vertices(c, CurvePoint(1, 0.2), CurvePoint(1, 0.9))) == []
    # A link ending exactly at a vertex must still cover that vertex.
    assert list(interior_vertices(c, CurvePoint(0, 0.0), CurvePoint(2, 0.0))) == [1, 2]
    with pytest.raises(OrderError):
        interior_vertices(c, CurvePoint(2, 0.5), CurvePoint(0, 0.5))


def test_load_csv_with_comments_and_duplicates(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text("# heading\n0,0\n1,1\n1,1\n2,0  # trailing\n")
    c = load_curve(path)
    assert c.n == 3
    assert c.vertices[2] == (2.0, 0.0)


def test_load_csv_errors_carry_line_numbers(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("0,0\n1\n")
    with pytest.raises(FormatError, match="line 2"):
        load_curve(path)
    path.write_text("0,0\nx,3\n")
    with pytest.raises(FormatError, match="line 2"):
        load_curve(path)
    path.write_text("0,0\n1,inf\n")
    with pytest.raises(FormatError, match="line 2"):
        load_curve(path)
    path.write_text("0,0\n")
    with pytest.raises(ValueError, match="fewer than two"):
        load_curve(path)


def test_load_geojson_feature_and_collection(tmp_path):
    doc = {
        "type": "FeatureCollection",
        "features": [
            {
                "type": "Feature",
                "geometry": {"type": "LineString", "coordinates": [[0, 0], [1, 1], [2, 0]]},
                "properties": {},
            }
        ],
    }
    path = tmp_path / "c.geojson"
    path.write_text(json.dumps(doc))
    c = load_curve(path)
    assert c.n == 3


def test_load_geojson_errors(tmp_path):
    path = tmp_path / "bad.geojson"
    path.write_text("{not json")
    with pytest.raises(FormatError, match="line 1"):
        load_curve(path)
    path.write_text(json.dumps({"type": "Point", "coordinates": [0, 0]}))
    with pytest.raises(FormatError, match="LineString"):
        load_curve(path)
    path.write_text(json.dumps({"type": "LineString", "coordinates": [[0, 0], [1]]}))
    with pytest.raises(FormatError, match="coordinate 1"):
        load_curve(path)


def test_format_inference(tmp_path):
    path = tmp_path / "curve.txt"
    path.write_text("0,0\n1,0\n")
    with pytest.raises(FormatError, match="infer"):
        load_curve(path)
    buf = io.StringIO("0,0\n1,0\n")
    assert load_curve(buf).n == 2


@given(st.integers(min_value=2, max_value=20), st.integers(min_value=0, max_value=2**32 - 1))
@settings(deadline=None, max_examples=60)
def test_save_load_roundtrip_exact(n, seed):
    rng = np.random.default_rng(seed)
    c = random_walk_curve(rng, n)
    for fmt in ("csv", "geojson"):
        buf = io.StringIO()
        save_curve(c, buf, fmt=fmt)
        buf.seek(0)
        back = load_curve(buf, fmt=fmt)
        assert back.vertices == c.vertices


@given(
    st.integers(min_value=2, max_value=12),
    st.integers(min_value=0, max_value=2**32 - 1),
    st.data(),
)
@settings(deadline=None, max_examples=100)
def test_arc_position_orders_like_compare(n, seed, data):
    rng = np.random.default_rng(seed)
    c = random_walk_curve(rng, n)
    e1 = data.draw(st.integers(min_value=0, max_value=c.num_edges - 1))
    e2 = data.draw(st.integers(min_value=0, max_value=c.num_edges - 1))
    t1 = data.draw(st.floats(min_value=0.0, max_value=1.0))
    t2 = data.draw(st.floats(min_value=0.0, max_value=1.0))
    a, b = CurvePoint(e1, t1), CurvePoint(e2, t2)
    cmp = c.compare(a, b)
    pa, pb = c.arc_position(a), c.arc_position(b)
    if cmp == 0:
        assert pa == pytest.approx(pb, abs=1e-9)
    elif cmp < 0:
        assert pa <= pb + 1e-9
    else:
        assert pa >= pb - 1e-9
