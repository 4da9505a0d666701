"""Electric and magnetic fields from charges and currents.

Run with ``python demos/04_sources_and_fields.py``.
"""

import math

from emcalc import (
    EPSILON_0,
    MU_0,
    LineCharge,
    LineCurrent,
    MultipleCharges,
    MultipleCurrents,
    PointCharge,
    Position,
    ScalarField,
    b_field,
    circle,
    e_field,
    segment,
    total_charge,
)

# Coulomb field of a point charge
q = PointCharge(1e-9, Position(0, 0, 0))
print("E of 1 nC at 1 m:", e_field(q)(Position(1, 0, 0)), "N/C")

# A long line charge looks like lambda / (2 pi eps0 s) near its middle.
line = LineCharge(ScalarField.constant(1e-9), segment((0, 0, -100), (0, 0, 100)), n=4000)
print("line charge total:", total_charge(line), "C")
print("E near the line:  ", e_field(line)(Position(0.5, 0, 0)).x, "vs", 1e-9 / (2 * math.pi * EPSILON_0 * 0.5))

# Superposition
pair = MultipleCharges((q, PointCharge(-1e-9, Position(0, 0, 1))))
print("dipole field at (0, 0, 0.5):", e_field(pair)(Position(0, 0, 0.5)))

# Biot-Savart field of a unit current loop, compared with the on-axis formula
loop = LineCurrent(1.0, circle(1))
B = b_field(loop)
for z in (0.0, 1.0, 2.0):
    exact = MU_0 / (2 * (1 + z * z) ** 1.5)
    print(f"B(0, 0, {z}) = {B(Position(0, 0, z)).z:.10e}  exact {exact:.10e}")

helmholtz = MultipleCurrents((LineCurrent(1.0, circle(1, (0, 0, 0.5))), LineCurrent(1.0, circle(1, (0, 0, -0.5)))))
print("Helmholtz pair at center:", b_field(helmholtz)(Position(0, 0, 0)).z, "vs", 0.8**1.5 * MU_0)
