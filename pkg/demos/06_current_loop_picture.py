"""Arrow picture of the magnetic field of a current loop.

The loop lies in the xy plane and pierces the yz plane at (0, +-1, 0);
the darkest arrows sit next to those points. Writes ``loop-b.svg`` in the
working directory. Run with ``python demos/06_current_loop_picture.py``.
"""

import numpy as np

from emcalc import LineCurrent, PlaneSlice, RenderSpec, b_field, circle, render_vector_field

B = b_field(LineCurrent(1.0, circle(1)))
result = render_vector_field(RenderSpec(scale=np.cbrt, grid_n=20, output_path="loop-b.svg"), PlaneSlice.yz(), B)

print("wrote", result.path, "with", result.arrow_count, "arrows")
i, j = np.unravel_index(np.nanargmax(result.intensity), result.intensity.shape)
u, v = PlaneSlice.yz().cell_centers(20)
print(f"darkest arrow at y={u[i, j]:.1f}, z={v[i, j]:.1f}")
