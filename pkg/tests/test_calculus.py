import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import ORACLES, error

from emcalc.calculus import (
    INTEGRALS,
    crossed_line_integral,
    curl,
    curve_sample,
    derivative,
    divergence,
    dotted_line_integral,
    dotted_surface_integral,
    gradient,
    scalar_line_integral,
    scalar_surface_integral,
    scalar_volume_integral,
    surface_sample,
    vector_line_integral,
    volume_sample,
)
from emcalc.domains import Surface, ball, boundary_of_surface, box, circle, cylinder, segment, sphere
from emcalc.fields import YHAT, ZHAT, ScalarField, VectorField, X, Y, Z, constant_vector_field, position_field
from emcalc.geometry import Position, Vec3

pi = math.pi
F_HW = -Z * YHAT + Y * ZHAT
RECT = Surface(lambda y, z: (0 * y, y, z), 0, 2, -4, 4)


# samplers


def test_curve_sampler_closure_and_length():
    s = curve_sample(1000)(circle(1))
    assert len(s) == 1000
    assert np.all(np.abs(s.elements.sum(axis=0)) < 1e-9)
    assert np.sum(np.linalg.norm(s.elements, axis=-1)) == pytest.approx(2 * pi, rel=1e-4)


def test_curve_sampler_uniform_chords():
    s = curve_sample(4)(segment((0, 0, 0), (0, 0, 2)))
    assert np.allclose(s.elements, [[0, 0, 0.5]] * 4, atol=0)
    assert s.positions[:, 2].tolist() == [0.25, 0.75, 1.25, 1.75]


def test_samples_iterate_as_pairs():
    pairs = list(curve_sample(2)(segment((0, 0, 0), (2, 0, 0))))
    assert pairs == [(Position(0.5, 0, 0), Vec3(1, 0, 0)), (Position(1.5, 0, 0), Vec3(1, 0, 0))]


def test_surface_sampler_examples():
    s = surface_sample(200)(sphere(1))
    assert np.sum(np.linalg.norm(s.elements, axis=-1)) == pytest.approx(4 * pi, rel=5e-3)
    assert np.linalg.norm(s.elements.sum(axis=0)) < 1e-6 * np.sum(np.linalg.norm(s.elements, axis=-1))
    r = surface_sample(1)(RECT)
    assert len(r) == 2
    assert np.sum(np.linalg.norm(r.elements, axis=-1)) == 16.0
    # orientation follows d/ds x d/dt: +x for the rectangle
    assert np.all(r.elements[:, 0] > 0)


def test_surface_sample_positions_lie_on_sphere_chords():
    s = surface_sample(50)(sphere(2))
    r = np.linalg.norm(s.positions, axis=-1)
    assert np.all(r <= 2 + 1e-12) and np.all(r > 1.99)


def test_volume_sampler_examples():
    assert np.sum(volume_sample(40)(ball(1)).elements) == pytest.approx(4 * pi / 3, rel=1e-2)
    for n in (1, 3, 7):
        assert np.sum(volume_sample(n)(box()).elements) == pytest.approx(1.0, abs=1e-9)
    assert np.sum(volume_sample(40)(cylinder(1, 2)).elements) == pytest.approx(2 * pi, rel=1e-2)


@pytest.mark.parametrize("bad", [0, -1, 2.5, True])
def test_sampler_resolution_validated(bad):
    with pytest.raises(ValueError):
        curve_sample(bad)


# the nine integrals


def test_homework_right_side():
    edge = boundary_of_surface(RECT)
    assert dotted_line_integral(curve_sample(1000), F_HW, edge) == pytest.approx(32.0, abs=1e-4)


@pytest.mark.parametrize("name", list(ORACLES))
def test_integral_oracle_and_convergence(name):
    factory, field, domain, exact, n, tol = ORACLES[name]
    fn = INTEGRALS[name][0]
    e1 = error(fn(factory(n), field, domain), exact)
    e2 = error(fn(factory(2 * n), field, domain), exact)
    assert e2 * 3 <= e1
    default = {"curve": 1000, "surface": 200, "volume": 40}[INTEGRALS[name][2]]
    assert error(fn(factory(default), field, domain), exact) <= tol * max(np.linalg.norm(exact), 1)


def test_crossed_integral_of_constant_vanishes():
    F = constant_vector_field((1, -2, 0.5))
    for curve in (circle(1), circle(3, (1, 2, 3), (1, 1, 1))):
        v = crossed_line_integral(curve_sample(123), F, curve)
        assert np.linalg.norm(tuple(v)) < 1e-9 * np.sqrt(5.25) * 2 * pi * 3


def test_result_types():
    c = circle(1)
    assert isinstance(scalar_line_integral(curve_sample(10), X, c), float)
    assert isinstance(vector_line_integral(curve_sample(10), F_HW, c), Vec3)


def test_field_kind_mismatch_raises():
    with pytest.raises(TypeError, match="vector field"):
        dotted_line_integral(curve_sample(10), X, circle(1))
    with pytest.raises(TypeError, match="scalar field"):
        scalar_surface_integral(surface_sample(2), F_HW, sphere(1))


def test_batched_probe_axes():
    # a raw callable may add a leading probe axis
    k = np.array([1.0, 2.0, 3.0])
    out = scalar_volume_integral(volume_sample(4), lambda p: k[:, None] * np.ones(len(p)), box())
    assert np.allclose(out, k)


def test_errors_propagate_with_position():
    from emcalc.expr import scalar_field
    from emcalc.fields import FieldEvaluationError

    with pytest.raises(FieldEvaluationError) as info:
        scalar_line_integral(curve_sample(2), scalar_field("1/x"), segment((0, 0, 0), (0, 2, 0)))
    assert info.value.position == Position(0, 0.5, 0)


def test_determinism():
    a = dotted_surface_integral(surface_sample(50), F_HW, sphere(1))
    b = dotted_surface_integral(surface_sample(50), F_HW, sphere(1))
    assert a == b


# differential operators


def test_derivative_examples():
    assert derivative(1e-6, lambda x: x * x, 3) == pytest.approx(6, abs=1e-9 * 100)
    assert derivative(1e-6, math.sin, 0) == pytest.approx(1, abs=1e-8)
    assert derivative(1e-6, lambda x: 4.0, 2) == 0.0


def test_operator_examples():
    rng = np.random.default_rng(0)
    pts = rng.uniform(-5, 5, (20, 3))
    assert np.allclose(curl(1e-6, F_HW).evaluate(pts), [2, 0, 0], atol=1e-6)
    assert np.allclose(divergence(1e-6, position_field).evaluate(pts), 3, atol=1e-6)
    assert np.allclose(gradient(1e-6, X).evaluate(pts), [1, 0, 0], atol=1e-9)


def test_step_must_be_positive():
    with pytest.raises(ValueError):
        curl(0, F_HW)


ANALYTIC_GRADIENTS = [
    (X * Y * Z, lambda x, y, z: (y * z, x * z, x * y)),
    (X**3 - 2 * Y**2 + Z, lambda x, y, z: (3 * x**2, -4 * y, 1.0)),
    (X * X * Y + Z**3 / 3, lambda x, y, z: (2 * x * y, x * x, z * z)),
    (5 * X - 3 * Y + 0.5 * Z, lambda x, y, z: (5.0, -3.0, 0.5)),
    (X**2 + Y**2 + Z**2, lambda x, y, z: (2 * x, 2 * y, 2 * z)),
]


@pytest.mark.parametrize("f,grad", ANALYTIC_GRADIENTS)
def test_gradient_against_analytic(f, grad):
    pts = np.random.default_rng(1).uniform(-1, 1, (100, 3))
    expected = np.stack([np.broadcast_to(c, len(pts)) for c in grad(*pts.T)], axis=-1)
    assert np.max(np.abs(gradient(1e-6, f).evaluate(pts) - expected)) < 1e-7


def _poly_scalar(coef):
    """Cubic polynomial with the given 20 coefficients."""
    def f(p):
        x, y, z = p[..., 0], p[..., 1], p[..., 2]
        terms = [np.ones_like(x), x, y, z, x * x, y * y, z * z, x * y, y * z, x * z,
                 x**3, y**3, z**3, x * x * y, x * x * z, y * y * x, y * y * z, z * z * x, z * z * y, x * y * z]
        return sum(c * t for c, t in zip(coef, terms))
    return ScalarField(f)


coefs = st.lists(st.floats(-2, 2), min_size=20, max_size=20)


@settings(max_examples=20, deadline=None)
@given(coefs, coefs, coefs)
def test_div_curl_vanishes(a, b, c):
    F = VectorField.from_components(_poly_scalar(a), _poly_scalar(b), _poly_scalar(c))
    pts = np.random.default_rng(2).uniform(-1, 1, (100, 3))
    scale = max(1.0, np.max(np.abs(F.evaluate(pts))))
    assert np.max(np.abs(divergence(1e-4, curl(1e-4, F)).evaluate(pts))) < 1e-2 * scale


@settings(max_examples=20, deadline=None)
@given(coefs)
def test_curl_grad_vanishes(a):
    f = _poly_scalar(a)
    pts = np.random.default_rng(3).uniform(-1, 1, (100, 3))
    scale = max(1.0, np.max(np.abs(f.evaluate(pts))))
    assert np.max(np.abs(curl(1e-4, gradient(1e-4, f)).evaluate(pts))) < 1e-2 * scale
