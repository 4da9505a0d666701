"""The nine integrals over sampled curves, surfaces and volumes.

A sampler turns a domain into (position, element) pairs; each integral is
a sum over those pairs. Run with ``python demos/02_integrals.py``.
"""

import math

from emcalc import (
    RHAT,
    XHAT,
    YHAT,
    ScalarField,
    X,
    Y,
    ball,
    circle,
    crossed_line_integral,
    curve_sample,
    dotted_line_integral,
    dotted_surface_integral,
    scalar_surface_integral,
    scalar_volume_integral,
    sphere,
    surface_sample,
    volume_sample,
)
from emcalc.fields import ZHAT

one = ScalarField.constant(1.0)

print("circumference  ", dotted_line_integral(curve_sample(1000), -Y * XHAT + X * YHAT, circle(1)) / 2,
      "vs", math.pi)
print("sphere area    ", scalar_surface_integral(surface_sample(200), one, sphere(1)), "vs", 4 * math.pi)
print("ball volume    ", scalar_volume_integral(volume_sample(40), one, ball(1)), "vs", 4 * math.pi / 3)
print("flux of rhat   ", dotted_surface_integral(surface_sample(200), RHAT, sphere(2)), "vs", 16 * math.pi)
print("x zhat x dl    ", crossed_line_integral(curve_sample(1000), X * ZHAT, circle(1)), "vs (-pi, 0, 0)")

# Errors fall about fourfold when the resolution doubles (second order).
for n in (25, 50, 100):
    err = scalar_surface_integral(surface_sample(n), one, sphere(1)) - 4 * math.pi
    print(f"n={n:4d}  area error {err:.3e}")
