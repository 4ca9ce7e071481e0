"""Half-plane map, polygon construction, and support quantities."""

import math

import numpy as np
import pytest

from optiframe.geometry import (
    ConvexPolygon,
    DegenerateEdge,
    EmptyEdgeSet,
    NonUnitDirection,
    PolarVector,
    RepeatedDirection,
    ZeroSumViolation,
    edge_image,
    edge_sum,
    edge_to_half,
    half_to_edge,
    max_abs_projection_sum,
    polygon_from_edges,
    polygon_json,
    ratio_r,
    ratio_r_projection,
)
from optiframe.sampling import random_convex_polygon

SQ3 = math.sqrt(3.0)


def test_triangle_vertices_from_edges():
    p = polygon_from_edges([(0.5, SQ3 / 2), (0.5, -SQ3 / 2), (-1.0, 0.0)])
    assert p.vertices == ((0.0, 0.0), (0.5, SQ3 / 2), (-0.5, SQ3 / 2))


def test_square_vertices_from_edges():
    p = polygon_from_edges([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert p.vertices == ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0))
    assert p.perimeter() == pytest.approx(4.0, abs=1e-15)
    assert p.diameter() == pytest.approx(math.sqrt(2.0), abs=1e-15)


def test_edge_order_does_not_matter():
    edges = [(0, -1), (1, 0), (0, 1), (-1, 0)]
    assert polygon_from_edges(edges).vertices == polygon_from_edges(edges[::-1]).vertices


def test_zero_sum_violation():
    with pytest.raises(ZeroSumViolation):
        polygon_from_edges([(1, 0), (0, 1), (-1, -2)])


def test_degenerate_edge_rejected():
    with pytest.raises(DegenerateEdge):
        polygon_from_edges([(1, 0), (0, 0), (-1, 0)])


def test_repeated_direction_rejected():
    with pytest.raises(RepeatedDirection):
        polygon_from_edges([(1, 0), (2, 0), (-3, 1), (0, -1)])


def test_antipodal_directions_are_distinct():
    p = polygon_from_edges([(1, 0), (-1, 0), (0, 1), (0, -1)])
    assert p.m == 4


def test_too_few_edges():
    with pytest.raises(EmptyEdgeSet):
        polygon_from_edges([(1, 0), (-1, 0)])


def test_nonconvex_vertex_order_rejected():
    with pytest.raises(ValueError):
        ConvexPolygon(((0, 0), (1, 1), (1, 0), (0, 1)))


def test_polygon_closure_is_exact():
    rng = np.random.default_rng(11)
    for _ in range(25):
        p = random_convex_polygon(rng, int(rng.integers(3, 21)))
        sx, sy = edge_sum(p.edges())
        assert math.hypot(sx, sy) <= 1e-12


# ---- Half-plane model ----


def test_half_plane_examples():
    a = edge_to_half((1.0, 0.0))
    assert a == PolarVector(1.0, math.pi)
    assert a.xy() == pytest.approx((-1.0, 0.0), abs=1e-15)
    assert half_to_edge(a) == pytest.approx((1.0, 0.0), abs=1e-15)
    assert edge_image((0.0, 1.0)) == pytest.approx((-1.0, 0.0), abs=1e-15)


def test_zero_vector_is_canonical():
    assert PolarVector(0.0, 0.7) == PolarVector(0.0, math.pi)
    assert edge_to_half((0.0, 0.0)) == PolarVector(0.0, math.pi)
    assert half_to_edge(PolarVector(0.0, math.pi)) == (0.0, 0.0)


def test_polar_vector_validation():
    with pytest.raises(ValueError):
        PolarVector(-1.0, 1.0)
    with pytest.raises(ValueError):
        PolarVector(1.0, 0.0)
    with pytest.raises(ValueError):
        PolarVector(1.0, 3.5)
    with pytest.raises(ValueError):
        PolarVector(math.nan, 1.0)


def test_roundtrip_from_half_plane():
    rng = np.random.default_rng(5)
    for _ in range(500):
        a = PolarVector(float(rng.uniform(0.01, 3.0)), float(rng.uniform(1e-6, math.pi)))
        back = edge_to_half(half_to_edge(a))
        assert back.t == pytest.approx(a.t, abs=1e-12)
        assert back.phi == pytest.approx(a.phi, abs=1e-12)


def test_roundtrip_from_edges():
    rng = np.random.default_rng(6)
    for _ in range(500):
        e = (float(rng.normal()), float(rng.normal()))
        back = half_to_edge(edge_to_half(e))
        assert back == pytest.approx(e, abs=1e-12 * (1.0 + math.hypot(*e)))


def test_edge_image_is_sign_invariant():
    rng = np.random.default_rng(7)
    for _ in range(100):
        v = (float(rng.normal()), float(rng.normal()))
        w = (-v[0], -v[1])
        assert edge_image(v) == edge_image(w)
        assert edge_image(v) == pytest.approx(
            half_to_edge(edge_to_half(edge_image(v))), abs=1e-12
        )


# ---- Projection sums and widths ----


def test_projection_sum_square():
    value, u = max_abs_projection_sum([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert value == pytest.approx(2.0 * math.sqrt(2.0), abs=1e-12)
    assert abs(u[0]) == pytest.approx(math.sqrt(0.5), abs=1e-12)
    assert abs(u[1]) == pytest.approx(math.sqrt(0.5), abs=1e-12)


def test_projection_sum_triangle():
    # The maximum 2 is attained along every edge direction; only require
    # that the returned direction is one of the witnesses.
    edges = [(0.5, SQ3 / 2), (0.5, -SQ3 / 2), (-1.0, 0.0)]
    value, u = max_abs_projection_sum(edges)
    assert value == pytest.approx(2.0, abs=1e-12)
    assert math.hypot(*u) == pytest.approx(1.0, abs=1e-12)
    at_u = sum(abs(ex * u[0] + ey * u[1]) for ex, ey in edges)
    assert at_u == pytest.approx(value, abs=1e-12)


def test_projection_sum_single_edge():
    value, u = max_abs_projection_sum([(0.0, 3.0)])
    assert value == pytest.approx(3.0, abs=1e-12)
    assert (abs(u[0]), abs(u[1])) == pytest.approx((0.0, 1.0), abs=1e-12)


def test_projection_sum_empty():
    with pytest.raises(EmptyEdgeSet):
        max_abs_projection_sum([])


def test_diameter_projection_identity_random():
    rng = np.random.default_rng(12)
    for _ in range(100):
        p = random_convex_polygon(rng, int(rng.integers(3, 41)))
        value, _ = max_abs_projection_sum(p.edges())
        assert abs(p.diameter() - 0.5 * value) <= 1e-9 * p.perimeter()
        assert ratio_r_projection(p) == pytest.approx(ratio_r(p), abs=1e-9)


def test_width_never_exceeds_diameter():
    rng = np.random.default_rng(13)
    for _ in range(20):
        p = random_convex_polygon(rng, int(rng.integers(3, 31)))
        diam = p.diameter()
        widths = [
            p.support_width((math.cos(t), math.sin(t)))
            for t in np.linspace(0.0, math.pi, 4096, endpoint=False)
        ]
        top = max(widths)
        assert top <= diam * (1.0 + 1e-12)
        assert top >= diam * (1.0 - 1e-6)


def test_support_width_requires_unit_vector():
    p = polygon_from_edges([(1, 0), (0, 1), (-1, 0), (0, -1)])
    with pytest.raises(NonUnitDirection):
        p.support_width((1.0, 1.0))
    assert p.support_width((1.0, 0.0)) == pytest.approx(1.0, abs=1e-15)


def test_polygon_json_shape():
    p = polygon_from_edges([(1, 0), (0, 1), (-1, 0), (0, -1)])
    doc = polygon_json(p)
    assert sorted(doc) == ["diameter", "edges", "m", "perimeter", "r", "vertices"]
    assert doc["m"] == 4
    assert doc["r"] == pytest.approx(math.sqrt(2.0) / 4.0, abs=1e-15)
