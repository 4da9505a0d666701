import math

import numpy as np
import pytest

from emcalc.calculus import curve_sample, dotted_line_integral, surface_sample, volume_sample
from emcalc.domains import (
    Curve,
    Surface,
    Volume,
    ball,
    boundary_of_surface,
    boundary_of_volume,
    box,
    circle,
    cylinder,
    disk,
    helix,
    rectangle,
    segment,
    sphere,
)
from emcalc.fields import XHAT, YHAT, ZHAT, X, Y
from emcalc.geometry import DomainError, Position

pi = math.pi


def homework_rect():
    return Surface(lambda y, z: (0 * y, y, z), 0, 2, -4, 4)


def test_boundary_of_rect_corners():
    edge = boundary_of_surface(homework_rect())
    assert (edge.start, edge.end) == (0, 4)
    assert edge(0.0) == Position(0, 0, -4)
    assert edge(2.0) == Position(0, 2, 4)
    assert edge(1.0) == Position(0, 2, -4)
    assert edge(3.0) == Position(0, 0, 4)
    assert edge(4.0) == Position(0, 0, -4)


def test_boundary_of_unit_disk_is_circle():
    edge = boundary_of_surface(disk(1))
    s = curve_sample(1000)(edge)
    assert np.allclose(np.linalg.norm(s.positions[:, :2], axis=-1), 1, atol=1e-12)
    assert np.sum(np.linalg.norm(s.elements, axis=-1)) == pytest.approx(2 * pi, rel=1e-2)


def test_boundary_orientation_right_hand():
    # (-y/2, x/2, 0) has curl zhat, so the circulation equals the area
    F = -0.5 * Y * XHAT + 0.5 * X * YHAT
    for surf, area in ((disk(1), pi), (rectangle((0, 0, 0), (2, 0, 0), (0, 3, 0)), 6.0)):
        assert dotted_line_integral(curve_sample(1000), F, boundary_of_surface(surf)) == pytest.approx(area, rel=1e-2)
    assert dotted_line_integral(curve_sample(100), ZHAT, boundary_of_surface(disk(1))) == pytest.approx(0, abs=1e-12)


def _areas(faces, n=40):
    return [np.sum(np.linalg.norm(surface_sample(n)(f).elements, axis=-1)) for f in faces]


def test_boundary_of_ball_is_sphere():
    faces = boundary_of_volume(ball(1))
    assert len(faces) == 1
    assert sum(_areas(faces, 200)) == pytest.approx(4 * pi, rel=1e-2)


def test_boundary_of_unit_cube():
    faces = boundary_of_volume(box())
    assert len(faces) == 6
    assert _areas(faces, 4) == pytest.approx([1.0] * 6, rel=1e-12)
    # every face normal points away from the center
    for f in faces:
        s = surface_sample(2)(f)
        assert np.all(np.sum((s.positions - 0.5) * s.elements, axis=-1) > 0)


@pytest.mark.parametrize("vol", [box(), ball(1), cylinder(1, 2), box((1, 2, 3), (2, 0, 0), (0, 0, 1), (0, 3, 0))])
def test_closed_boundary_vector_area_vanishes(vol):
    total, scalar = np.zeros(3), 0.0
    for f in boundary_of_volume(vol):
        s = surface_sample(60)(f)
        total += s.elements.sum(axis=0)
        scalar += np.linalg.norm(s.elements, axis=-1).sum()
    assert np.linalg.norm(total) < 1e-6 * scalar


def test_box_surface_area_tiles():
    faces = boundary_of_volume(box((0, 0, 0), (1, 0, 0), (0, 2, 0), (0, 0, 3)))
    assert sum(_areas(faces, 8)) == pytest.approx(2 * (2 + 3 + 6), rel=1e-12)


def test_unpruned_boundary_keeps_six_faces():
    assert len(boundary_of_volume(ball(1), prune=False)) == 6


def test_shape_examples():
    assert segment((0, 0, 0), (0, 0, 2))(0.5) == Position(0, 0, 1)
    p = circle(1)(pi / 2)
    assert np.allclose(p.cartesian(), (0, 1, 0), atol=1e-15)
    assert np.sum(volume_sample(40)(ball(1)).elements) == pytest.approx(4 * pi / 3, rel=1e-2)
    assert np.sum(volume_sample(20)(cylinder(1, 2)).elements) == pytest.approx(2 * pi, rel=1e-2)
    h = helix(1, 0.5, 2)
    assert np.allclose(h(h.end).cartesian(), (1, 0, 1), atol=1e-12)


def test_circle_on_tilted_axis_stays_in_plane():
    c = circle(2, (1, 1, 1), (1, 1, 0))
    pts = c.points(np.linspace(c.start, c.end, 17))
    d = pts - 1
    assert np.allclose(d @ np.array([1, 1, 0]), 0, atol=1e-12)
    assert np.allclose(np.linalg.norm(d, axis=-1), 2)


@pytest.mark.parametrize("make", [
    lambda: circle(0),
    lambda: circle(-1),
    lambda: disk(1, axis=(0, 0, 0)),
    lambda: sphere(0),
    lambda: ball(-2),
    lambda: cylinder(1, 0),
    lambda: rectangle((0, 0, 0), (1, 0, 0), (2, 0, 0)),
    lambda: Curve(lambda t: (t, t, t), 1, 0),
    lambda: Surface(lambda s, t: (s, t, 0 * s), 0, 1, 1, 0),
    lambda: Volume(lambda s, t, u: (s, t, u), 0, 1, 0, 1, 1, 0),
    lambda: Curve(lambda t: (1 / t, t, t), 0, 1),
])
@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_degenerate_inputs_rejected(make):
    with pytest.raises(DomainError):
        make()


def test_nested_limits():
    # triangle 0 <= t <= s <= 1 has area 1/2
    tri = Surface(lambda s, t: (s, t, 0 * s), 0, 1, 0, lambda s: s)
    assert np.sum(np.linalg.norm(surface_sample(10)(tri).elements, axis=-1)) == pytest.approx(0.5, rel=1e-12)
    # tetrahedron has volume 1/6
    tet = Volume(lambda s, t, u: (s, t, u), 0, 1, 0, lambda s: 1 - s, 0, lambda s, t: 1 - s - t)
    assert np.sum(volume_sample(20)(tet).elements) == pytest.approx(1 / 6, rel=1e-2)


def test_curve_pointwise_and_arrays():
    c = Curve.pointwise(lambda t: Position(t, 2 * t, 0), 0, 1)
    assert c(0.5) == Position(0.5, 1, 0)
    assert c.points(np.array([0.0, 1.0])).tolist() == [[0, 0, 0], [1, 2, 0]]
