"""Numerical vector calculus and electro/magnetostatics over 3-space.

Fields are functions of position; domains are parametrized curves,
surfaces and volumes; integrals are sums over sampled elements. Electric
and magnetic fields are built from charge and current distributions, and
the fundamental theorems can be checked numerically.
"""

__version__ = "0.1.0"

from .geometry import (  # noqa: E402
    DomainError,
    Position,
    Vec3,
    cart,
    cartesian_coordinates,
    cross,
    cyl,
    cylindrical_coordinates,
    displacement,
    dot,
    from_cartesian,
    from_cylindrical,
    from_spherical,
    magnitude,
    normalize,
    orthonormal_frame,
    sph,
    spherical_coordinates,
)
from .fields import (  # noqa: E402
    PHIHAT,
    RHAT,
    SHAT,
    THETAHAT,
    XHAT,
    YHAT,
    ZHAT,
    X,
    Y,
    Z,
    FieldEvaluationError,
    FieldSingularityError,
    ScalarField,
    VectorField,
    constant_vector_field,
    position_field,
    unit_basis_field,
)
from .domains import (  # noqa: E402
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
from .calculus import (  # noqa: E402
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
    vector_surface_integral,
    vector_volume_integral,
    volume_sample,
)
from .em import (  # noqa: E402
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
from .theorems import TheoremReport, check_divergence_theorem, check_gradient_theorem, check_stokes  # noqa: E402
from .viz import SCALES, PlaneSlice, RenderSpec, render_vector_field  # noqa: E402
