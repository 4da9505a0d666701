import math

import numpy as np
import pytest

from emcalc.calculus import dotted_surface_integral, surface_sample
from emcalc.domains import ball, circle, disk, segment, sphere
from emcalc.em import (
    EPSILON_0,
    MU_0,
    LineCharge,
    LineCurrent,
    MultipleCharges,
    MultipleCurrents,
    PointCharge,
    SurfaceCharge,
    VolumeCharge,
    b_field,
    b_field_from_line_current,
    e_field,
    total_charge,
)
from emcalc.fields import FieldSingularityError, ScalarField, X
from emcalc.geometry import Position

pi = math.pi
K = 1 / (4 * pi * EPSILON_0)


def on_axis(z, R=1.0, I=1.0):
    return MU_0 * I * R**2 / (2 * (R**2 + z**2) ** 1.5)


def test_constants():
    assert EPSILON_0 == 8.8541878128e-12
    assert MU_0 == 4e-7 * pi
    assert K == pytest.approx(8.9875517873e9, rel=1e-9)


def test_point_charge_coulomb():
    E = e_field(PointCharge(1e-9, Position(0, 0, 0)))(Position(1, 0, 0))
    assert E.x == pytest.approx(1e-9 * K, rel=1e-12)
    assert (E.y, E.z) == (0, 0)


def test_empty_distributions_give_zero():
    pts = np.random.default_rng(0).normal(size=(5, 3))
    assert np.array_equal(e_field(MultipleCharges(())).evaluate(pts), np.zeros((5, 3)))
    assert np.array_equal(b_field(MultipleCurrents(())).evaluate(pts), np.zeros((5, 3)))


def test_dipole_superposition():
    q, a = 2e-9, 0.5
    pair = MultipleCharges((PointCharge(q, Position(0, 0, a)), PointCharge(-q, Position(0, 0, -a))))
    E = e_field(pair)(Position(0, 0, 0))
    assert np.allclose(tuple(E), (0, 0, -2 * K * q / a**2), rtol=1e-12)


def test_singularity_point_charge():
    E = e_field(PointCharge(1.0, Position(1, 2, 3)))
    with pytest.raises(FieldSingularityError) as info:
        E(Position(1, 2, 3))
    assert info.value.position == Position(1, 2, 3)


def test_singularity_on_wire_sample():
    loop = circle(1)
    B = b_field_from_line_current(1.0, loop, n=4)
    # the n=4 midpoint samples sit at t = pi/4 + k pi/2
    probe = loop(pi / 4)
    with pytest.raises(FieldSingularityError):
        B(probe)


@pytest.mark.parametrize("z", [0.0, 0.5, 1.0, 2.0])
def test_loop_on_axis(z):
    B = b_field_from_line_current(1.0, circle(1))(Position(0, 0, z))
    assert B.z == pytest.approx(on_axis(z), rel=1e-5)
    assert math.hypot(B.x, B.y) < 1e-9 * abs(B.z)


def test_loop_examples():
    B = b_field(LineCurrent(1.0, circle(1)))
    assert B(Position(0, 0, 0)).z == pytest.approx(6.2832e-7, rel=1e-4)
    assert B(Position(0, 0, 2)).z == pytest.approx(5.6199e-8, rel=1e-4)
    zero = b_field(LineCurrent(0.0, circle(1)))(Position(0.3, 0.2, 0.1))
    assert tuple(zero) == (0, 0, 0)


def test_current_superposition():
    loop = LineCurrent(1.0, circle(1))
    pts = np.random.default_rng(1).uniform(-2, 2, (10, 3)) + [0, 0, 3]
    one = b_field(loop).evaluate(pts)
    two = b_field(MultipleCurrents((loop, loop))).evaluate(pts)
    assert np.allclose(two, 2 * one, rtol=1e-12, atol=0)


def test_helmholtz_pair():
    pair = MultipleCurrents((LineCurrent(1.0, circle(1, (0, 0, 0.5))), LineCurrent(1.0, circle(1, (0, 0, -0.5)))))
    assert b_field(pair)(Position(0, 0, 0)).z == pytest.approx(0.8**1.5 * MU_0, rel=1e-4)


def test_charge_linearity():
    a = PointCharge(1e-9, Position(0, 0, 1))
    b = LineCharge(ScalarField.constant(2e-9), segment((1, 0, 0), (1, 1, 0)), n=100)
    pts = np.random.default_rng(2).uniform(-1, 1, (6, 3)) + [0, 0, 4]
    both = e_field(MultipleCharges((a, b))).evaluate(pts)
    assert np.allclose(both, e_field(a).evaluate(pts) + e_field(b).evaluate(pts), rtol=1e-12, atol=0)


def test_line_charge_far_field_is_point_like():
    line = LineCharge(ScalarField.constant(1e-9), segment((0, 0, -0.01), (0, 0, 0.01)), n=50)
    E = e_field(line)(Position(10, 0, 0))
    assert E.x == pytest.approx(K * 2e-11 / 100, rel=1e-5)


def test_infinite_line_limit():
    # long uniform line: E = lambda / (2 pi eps0 s) at its middle
    line = LineCharge(ScalarField.constant(1e-9), segment((0, 0, -500), (0, 0, 500)), n=20000)
    E = e_field(line)(Position(1, 0, 0))
    assert E.x == pytest.approx(1e-9 / (2 * pi * EPSILON_0), rel=1e-3)


def test_charged_disk_on_axis():
    sigma, z = 1e-9, 0.5
    E = e_field(SurfaceCharge(ScalarField.constant(sigma), disk(1), n=100))(Position(0, 0, z))
    exact = sigma / (2 * EPSILON_0) * (1 - z / math.sqrt(z * z + 1))
    assert E.z == pytest.approx(exact, rel=1e-3)


def test_charged_ball_outside():
    rho = 1e-9
    E = e_field(VolumeCharge(ScalarField.constant(rho), ball(1), n=20))(Position(0, 0, 3))
    assert E.z == pytest.approx(K * rho * 4 * pi / 3 / 9, rel=1e-2)


def test_total_charge_examples():
    assert total_charge(PointCharge(3e-9, Position(5, 5, 5))) == 3e-9
    assert total_charge(LineCharge(ScalarField.constant(2.0), segment((0, 0, 0), (0.5, 0, 0)))) == pytest.approx(
        1.0, abs=1e-6)
    assert total_charge(VolumeCharge(ScalarField.constant(1.0), ball(1))) == pytest.approx(4 * pi / 3, rel=1e-2)
    assert total_charge(MultipleCharges((PointCharge(1, Position(0, 0, 0)),
                                         LineCharge(X, segment((0, 0, 0), (2, 0, 0)))))) == pytest.approx(3.0)


def test_gauss_point_charge_moderate_resolution():
    E = e_field(PointCharge(1.0, Position(0, 0, 0)))
    for R in (0.5, 5.0):
        flux = dotted_surface_integral(surface_sample(60), E, sphere(R))
        assert flux == pytest.approx(1 / EPSILON_0, rel=5e-3)


def test_gauss_charge_outside_gives_zero_flux():
    E = e_field(PointCharge(1.0, Position(3, 0, 0)))
    flux = dotted_surface_integral(surface_sample(80), E, sphere(1))
    assert abs(flux) < 1e-3 / EPSILON_0
