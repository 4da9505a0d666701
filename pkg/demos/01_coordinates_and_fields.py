"""Positions, coordinate systems and fields as functions of position.

Run with ``python demos/01_coordinates_and_fields.py``.
"""

import math

import numpy as np

from emcalc import (
    PHIHAT,
    RHAT,
    THETAHAT,
    YHAT,
    ZHAT,
    Position,
    Vec3,
    Y,
    Z,
    cross,
    cylindrical_coordinates,
    from_spherical,
    spherical_coordinates,
)

# A position is stored as a Cartesian triple; other systems are views of it.
p = from_spherical(2.0, math.pi / 3, math.pi / 4)
print("cartesian  ", p.cartesian())
print("cylindrical", cylindrical_coordinates(p))
print("spherical  ", spherical_coordinates(p))

# Vec3 algebra
a, b = Vec3(1, 2, 3), Vec3(4, 5, 6)
print("a x b =", cross(a, b))

# The spherical unit vectors at p form a right-handed frame.
r, th, ph = RHAT(p), THETAHAT(p), PHIHAT(p)
print("rhat x thetahat =", cross(r, th), " phihat =", ph)

# Fields compose like the math: F = -z yhat + y zhat.
F = -Z * YHAT + Y * ZHAT
print("F(1, 2, 3) =", F(Position(1, 2, 3)))

# Fields are vectorized: a (..., 3) array of positions gives (..., 3) values.
grid = np.stack(np.meshgrid([0, 1], [0, 1], [0, 1], indexing="ij"), axis=-1).astype(float)
print("F on a 2x2x2 grid has shape", F.evaluate(grid).shape)
