"""Checking Stokes' theorem for F = -z yhat + y zhat on a rectangle.

The rectangle lies in the plane x = 0 with 0 <= y <= 2 and -4 <= z <= 4,
oriented along +x. The curl of F is 2 xhat, so both sides should be
2 * 16 = 32. Run with ``python demos/03_stokes_homework.py``.
"""

from emcalc import (
    Position,
    Surface,
    YHAT,
    ZHAT,
    Y,
    Z,
    boundary_of_surface,
    check_stokes,
    curl,
    curve_sample,
    dotted_line_integral,
    dotted_surface_integral,
    surface_sample,
)

F = -Z * YHAT + Y * ZHAT
rect = Surface(lambda y, z: (0 * y, y, z), 0, 2, -4, 4)

curl_F = curl(1e-6, F)
print("curl F at (1, 2, 3):", curl_F(Position(1, 2, 3)))

left = dotted_surface_integral(surface_sample(200), curl_F, rect)
edge = boundary_of_surface(rect)
right = dotted_line_integral(curve_sample(1000), F, edge)
print("flux of curl F:     ", left)
print("circulation of F:   ", right)

# The boundary runs counterclockwise seen from +x, one parameter unit per side.
for t in (0, 1, 2, 3):
    print(f"edge({t}) =", edge(float(t)))

print(check_stokes(F, rect, 1e-6, surface_sample(200), curve_sample(1000)))
