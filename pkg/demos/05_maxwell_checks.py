"""The static Maxwell laws checked numerically.

Gauss's law, no magnetic monopoles, and zero circulation of an
electrostatic field. Run with ``python demos/05_maxwell_checks.py``
(the monopole check takes several seconds).
"""

import math

from emcalc import (
    EPSILON_0,
    LineCurrent,
    PointCharge,
    Position,
    b_field,
    circle,
    curve_sample,
    dotted_line_integral,
    dotted_surface_integral,
    e_field,
    sphere,
    surface_sample,
)

E = e_field(PointCharge(1.0, Position(0, 0, 0)))
for R in (0.5, 1.0, 5.0):
    flux = dotted_surface_integral(surface_sample(200), E, sphere(R))
    print(f"flux of E through sphere R={R}: {flux:.6e}  (Q/eps0 = {1 / EPSILON_0:.6e})")

circ = dotted_line_integral(curve_sample(1000), E, circle(1, (2, 0, 0)))
print("circulation of E around an off-center circle:", circ)

B = b_field(LineCurrent(1.0, circle(1)))
flux = dotted_surface_integral(surface_sample(200), B, sphere(0.5, (0, 0, 2)))
scale = abs(B(Position(0, 0, 2)).z) * 4 * math.pi * 0.25
print(f"flux of B through a small sphere: {flux:.3e}  (|B| x area = {scale:.3e})")
