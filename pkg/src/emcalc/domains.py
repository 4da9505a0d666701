"""Parametric curves, surfaces and volumes.

Parametrizing functions are vectorized: they receive parameter arrays and
return positions with a trailing axis of length 3. A function may also
return a 3-tuple of arrays/numbers, which is broadcast and stacked::

    rect = Surface(lambda y, z: (0, y, z), 0, 2, -4, 4)

Limits of the inner parameters may depend on the outer ones (``t`` limits
are functions of ``s``, ``u`` limits functions of ``(s, t)``); constants are
accepted too.

Orientation conventions: a curve runs toward increasing parameter; a
surface's normal points along ``df/ds x df/dt``; the boundary of a surface
circulates right-handedly about that normal; the faces bounding a volume
point outward.
"""

from __future__ import annotations

import math

import numpy as np

from .geometry import DomainError, Position, Vec3, orthonormal_frame
from .fields import as_points

__all__ = [
    "Curve",
    "Surface",
    "Volume",
    "boundary_of_surface",
    "boundary_of_volume",
    "segment",
    "circle",
    "helix",
    "rectangle",
    "disk",
    "sphere",
    "ball",
    "cylinder",
    "box",
]

_CHECK_POINTS = 9


def _to_points(out, shape) -> np.ndarray:
    """Coerce a parametrization result to an array of shape ``shape + (3,)``."""
    if isinstance(out, (Position, Vec3)):
        out = (out.x, out.y, out.z)
    if isinstance(out, (tuple, list)):
        if len(out) != 3:
            raise ValueError("a parametrization must return three coordinates")
        comps = [np.broadcast_to(np.asarray(c, dtype=float), shape) for c in out]
        return np.stack(comps, axis=-1)
    a = np.asarray(out, dtype=float)
    return np.broadcast_to(a, shape + (3,))


def _limit(f):
    if callable(f):
        def lim(*args):
            shape = np.broadcast_shapes(*(np.shape(a) for a in args))
            return np.broadcast_to(np.asarray(f(*args), dtype=float), shape)

        return lim
    c = float(f)

    def const(*args):
        shape = np.broadcast_shapes(*(np.shape(a) for a in args))
        return np.full(shape, c)

    return const


def _as_position_or_array(p):
    p = np.asarray(p)
    if p.shape == (3,):
        return Position(*map(float, p))
    return p


def _check_finite(points, what: str):
    if not np.all(np.isfinite(points)):
        raise DomainError(f"{what} parametrization produced non-finite positions")


class Curve:
    """A map of one parameter ``t`` in ``[start, end]`` into space."""

    def __init__(self, func, start: float, end: float, name: str | None = None):
        self.func = func
        self.start = float(start)
        self.end = float(end)
        self.name = name
        if not self.start <= self.end:
            raise DomainError(f"curve start {self.start} exceeds end {self.end}")
        _check_finite(self.points(np.linspace(self.start, self.end, _CHECK_POINTS)), "curve")

    @classmethod
    def pointwise(cls, fn, start: float, end: float, name: str | None = None) -> Curve:
        """Build a curve from a per-parameter function ``float -> Position``."""

        def func(t):
            t = np.asarray(t, dtype=float)
            out = np.array([tuple(as_points(fn(float(ti)))) for ti in t.ravel()], dtype=float)
            return out.reshape(t.shape + (3,))

        return cls(func, start, end, name)

    def points(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        return _to_points(self.func(t), t.shape)

    def __call__(self, t):
        return _as_position_or_array(self.points(t))

    def __repr__(self):
        return f"Curve({self.name or self.func!r}, {self.start}, {self.end})"


class Surface:
    """A map of two parameters ``(s, t)`` into space.

    ``s`` runs over ``[s_lo, s_hi]`` and ``t`` over ``[t_lo(s), t_hi(s)]``.
    """

    def __init__(self, func, s_lo, s_hi, t_lo, t_hi, name: str | None = None):
        self.func = func
        self.s_lo = float(s_lo)
        self.s_hi = float(s_hi)
        self.t_lo = _limit(t_lo)
        self.t_hi = _limit(t_hi)
        self.name = name
        if not self.s_lo <= self.s_hi:
            raise DomainError(f"surface s limits out of order: {self.s_lo} > {self.s_hi}")
        s = np.linspace(self.s_lo, self.s_hi, _CHECK_POINTS)
        if np.any(self.t_lo(s) > self.t_hi(s)):
            raise DomainError("surface t limits out of order somewhere in [s_lo, s_hi]")
        a = np.linspace(0.0, 1.0, _CHECK_POINTS)
        _check_finite(self.unit_points(*np.meshgrid(a, a, indexing="ij")), "surface")

    def points(self, s, t) -> np.ndarray:
        s, t = np.broadcast_arrays(np.asarray(s, dtype=float), np.asarray(t, dtype=float))
        return _to_points(self.func(s, t), s.shape)

    def unit_points(self, a, b) -> np.ndarray:
        """Image of the unit square ``(a, b)``, honoring the nested limits."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
        s = self.s_lo + a * (self.s_hi - self.s_lo)
        lo, hi = self.t_lo(s), self.t_hi(s)
        return self.points(s, lo + b * (hi - lo))

    def __call__(self, s, t):
        return _as_position_or_array(self.points(s, t))

    def __repr__(self):
        return f"Surface({self.name or self.func!r})"


class Volume:
    """A map of three parameters ``(s, t, u)`` into space.

    ``s`` in ``[s_lo, s_hi]``, ``t`` in ``[t_lo(s), t_hi(s)]``, ``u`` in
    ``[u_lo(s, t), u_hi(s, t)]``.
    """

    def __init__(self, func, s_lo, s_hi, t_lo, t_hi, u_lo, u_hi, name: str | None = None):
        self.func = func
        self.s_lo = float(s_lo)
        self.s_hi = float(s_hi)
        self.t_lo = _limit(t_lo)
        self.t_hi = _limit(t_hi)
        self.u_lo = _limit(u_lo)
        self.u_hi = _limit(u_hi)
        self.name = name
        if not self.s_lo <= self.s_hi:
            raise DomainError(f"volume s limits out of order: {self.s_lo} > {self.s_hi}")
        a = np.linspace(0.0, 1.0, _CHECK_POINTS)
        s = self.s_lo + a * (self.s_hi - self.s_lo)
        t_lo, t_hi = self.t_lo(s), self.t_hi(s)
        if np.any(t_lo > t_hi):
            raise DomainError("volume t limits out of order somewhere in [s_lo, s_hi]")
        ss, bb = np.meshgrid(s, a, indexing="ij")
        tt = self.t_lo(ss) + bb * (self.t_hi(ss) - self.t_lo(ss))
        if np.any(self.u_lo(ss, tt) > self.u_hi(ss, tt)):
            raise DomainError("volume u limits out of order somewhere in the (s, t) domain")
        _check_finite(self.unit_points(*np.meshgrid(a, a, a, indexing="ij")), "volume")

    def points(self, s, t, u) -> np.ndarray:
        s, t, u = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (s, t, u)))
        return _to_points(self.func(s, t, u), s.shape)

    def unit_points(self, a, b, c) -> np.ndarray:
        """Image of the unit cube ``(a, b, c)``, honoring the nested limits."""
        a, b, c = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (a, b, c)))
        s = self.s_lo + a * (self.s_hi - self.s_lo)
        t_lo, t_hi = self.t_lo(s), self.t_hi(s)
        t = t_lo + b * (t_hi - t_lo)
        u_lo, u_hi = self.u_lo(s, t), self.u_hi(s, t)
        return self.points(s, t, u_lo + c * (u_hi - u_lo))

    def __call__(self, s, t, u):
        return _as_position_or_array(self.points(s, t, u))

    def __repr__(self):
        return f"Volume({self.name or self.func!r})"


# boundaries


def boundary_of_surface(surface: Surface) -> Curve:
    """The closed boundary curve of `surface`, parametrized on ``[0, 4]``.

    One unit of parameter per edge: ``t = t_lo`` forward in ``s``, then
    ``s = s_hi`` forward in ``t``, ``t = t_hi`` backward in ``s`` and
    ``s = s_lo`` backward in ``t``.
    """

    def func(param):
        param = np.asarray(param, dtype=float)
        k = np.clip(np.floor(param), 0, 3)
        tau = param - k
        a = np.select([k == 0, k == 1, k == 2], [tau, 1.0, 1.0 - tau], 0.0)
        b = np.select([k == 0, k == 1, k == 2], [0.0, tau, 1.0], 1.0 - tau)
        return surface.unit_points(a, b)

    return Curve(func, 0.0, 4.0, name=f"boundary of {surface.name or 'surface'}")


def _face(volume: Volume, fixed_axis: int, value: float, cyclic: bool) -> Surface:
    # (p, q) fill the two free axes in cyclic order so that dp x dq points
    # along +axis; swapping them points along -axis
    free = [(fixed_axis + 1) % 3, (fixed_axis + 2) % 3]
    if not cyclic:
        free.reverse()

    def func(p, q):
        coords = [None, None, None]
        coords[fixed_axis] = np.full(np.shape(p), value)
        coords[free[0]] = p
        coords[free[1]] = q
        return volume.unit_points(*coords)

    names = "stu"
    side = "hi" if value == 1.0 else "lo"
    return Surface(func, 0.0, 1.0, 0.0, 1.0, name=f"{names[fixed_axis]}_{side} face")


def _orientation_sign(volume: Volume, n: int = 6) -> float:
    from .calculus import signed_volume

    return math.copysign(1.0, signed_volume(volume, n))


def _face_area(face: Surface, n: int = 8) -> float:
    from .calculus import surface_sample

    return float(np.sum(np.linalg.norm(surface_sample(n)(face).elements, axis=-1)))


def boundary_of_volume(volume: Volume, prune: bool = True) -> list[Surface]:
    """Outward-oriented faces bounding `volume`.

    With `prune`, faces of zero area (a parametrization collapsing to a
    point or line) are dropped, and so are pairs of opposite faces that
    coincide as point sets (a periodic seam such as ``phi = 0`` and
    ``phi = 2 pi``), since their fluxes cancel.
    """
    sign = _orientation_sign(volume)
    faces = {}
    for axis in range(3):
        for value in (0.0, 1.0):
            cyclic = (value == 1.0) == (sign > 0)
            faces[(axis, value)] = _face(volume, axis, value, cyclic)
    if not prune:
        return list(faces.values())

    grid = np.linspace(0.0, 1.0, 7)
    pp, qq = np.meshgrid(grid, grid, indexing="ij")
    extent = np.ptp(volume.unit_points(*np.meshgrid(grid, grid, grid, indexing="ij")).reshape(-1, 3), axis=0)
    scale = float(np.max(extent)) or 1.0
    drop = set()
    for axis in range(3):
        coords = [pp, qq]
        coords.insert(axis, np.zeros_like(pp))
        lo = volume.unit_points(*coords)
        coords[axis] = np.ones_like(pp)
        hi = volume.unit_points(*coords)
        if np.max(np.linalg.norm(lo - hi, axis=-1)) <= 1e-9 * scale:
            drop.update({(axis, 0.0), (axis, 1.0)})

    areas = {key: _face_area(face) for key, face in faces.items() if key not in drop}
    biggest = max(areas.values(), default=0.0)
    for key, area in areas.items():
        if area <= 1e-9 * biggest:
            drop.add(key)
    return [face for key, face in faces.items() if key not in drop]


# shape library


def _vec(p, what: str) -> np.ndarray:
    a = as_points(p).astype(float)
    if a.shape != (3,):
        raise DomainError(f"{what} must be a 3-vector")
    return a


def _positive(x, what: str) -> float:
    x = float(x)
    if not x > 0:
        raise DomainError(f"{what} must be positive, got {x}")
    return x


def _place(origin, *terms):
    # origin + sum(coef[..., None] * direction)
    out = origin
    for coef, direction in terms:
        out = out + np.asarray(coef, dtype=float)[..., None] * direction
    return out


def segment(p0, p1) -> Curve:
    """Straight segment from `p0` to `p1`, ``t`` in ``[0, 1]``."""
    a, b = _vec(p0, "p0"), _vec(p1, "p1")
    return Curve(lambda t: _place(a, (t, b - a)), 0.0, 1.0, name="segment")


def circle(radius, center=(0.0, 0.0, 0.0), axis=(0.0, 0.0, 1.0)) -> Curve:
    """Counterclockwise circle about `axis`, ``t`` in ``[0, 2 pi]``.

    With the default axis the parametrization is ``(R cos t, R sin t, 0)``
    plus `center`.
    """
    R = _positive(radius, "radius")
    c = _vec(center, "center")
    u, v, _ = orthonormal_frame(axis)
    return Curve(
        lambda t: _place(c, (R * np.cos(t), u), (R * np.sin(t), v)), 0.0, 2 * math.pi, name="circle"
    )


def helix(radius, pitch, turns=1.0, center=(0.0, 0.0, 0.0), axis=(0.0, 0.0, 1.0)) -> Curve:
    """Right-handed helix rising `pitch` per turn along `axis`."""
    R = _positive(radius, "radius")
    turns = _positive(turns, "turns")
    pitch = float(pitch)
    c = _vec(center, "center")
    u, v, w = orthonormal_frame(axis)
    return Curve(
        lambda t: _place(c, (R * np.cos(t), u), (R * np.sin(t), v), (pitch * t / (2 * math.pi), w)),
        0.0,
        2 * math.pi * turns,
        name="helix",
    )


def rectangle(corner, edge1, edge2) -> Surface:
    """Parallelogram ``corner + s edge1 + t edge2`` with normal ``edge1 x edge2``."""
    c, e1, e2 = _vec(corner, "corner"), _vec(edge1, "edge1"), _vec(edge2, "edge2")
    if not np.linalg.norm(np.cross(e1, e2)) > 0:
        raise DomainError("rectangle edges must be linearly independent")
    return Surface(lambda s, t: _place(c, (s, e1), (t, e2)), 0.0, 1.0, 0.0, 1.0, name="rectangle")


def disk(radius, center=(0.0, 0.0, 0.0), axis=(0.0, 0.0, 1.0)) -> Surface:
    """Flat disk with normal along `axis`.

    Parametrized by the elliptical square-to-disk map on ``[-1, 1]^2`` so
    that the boundary of the parameter square lands exactly on the rim
    circle (no radial seam edges).
    """
    R = _positive(radius, "radius")
    c = _vec(center, "center")
    u, v, _ = orthonormal_frame(axis)

    def func(a, b):
        x = a * np.sqrt(np.maximum(1.0 - 0.5 * b * b, 0.0))
        y = b * np.sqrt(np.maximum(1.0 - 0.5 * a * a, 0.0))
        return _place(c, (R * x, u), (R * y, v))

    return Surface(func, -1.0, 1.0, -1.0, 1.0, name="disk")


def sphere(radius, center=(0.0, 0.0, 0.0)) -> Surface:
    """Sphere parametrized by ``(theta, phi)``; outward normal."""
    R = _positive(radius, "radius")
    c = _vec(center, "center")

    def func(theta, phi):
        st = np.sin(theta)
        return c + R * np.stack([st * np.cos(phi), st * np.sin(phi), np.cos(theta)], axis=-1)

    return Surface(func, 0.0, math.pi, 0.0, 2 * math.pi, name="sphere")


def ball(radius, center=(0.0, 0.0, 0.0)) -> Volume:
    """Solid ball parametrized by ``(r, theta, phi)``."""
    R = _positive(radius, "radius")
    c = _vec(center, "center")

    def func(r, theta, phi):
        st = np.sin(theta)
        return c + np.stack([r * st * np.cos(phi), r * st * np.sin(phi), r * np.cos(theta)], axis=-1)

    return Volume(func, 0.0, R, 0.0, math.pi, 0.0, 2 * math.pi, name="ball")


def cylinder(radius, height, center=(0.0, 0.0, 0.0), axis=(0.0, 0.0, 1.0)) -> Volume:
    """Solid circular cylinder; `center` is the center of the base disk."""
    R = _positive(radius, "radius")
    h = _positive(height, "height")
    c = _vec(center, "center")
    u, v, w = orthonormal_frame(axis)

    def func(s, phi, z):
        return _place(c, (s * np.cos(phi), u), (s * np.sin(phi), v), (z, w))

    return Volume(func, 0.0, R, 0.0, 2 * math.pi, 0.0, h, name="cylinder")


def box(corner=(0.0, 0.0, 0.0), edge1=(1.0, 0.0, 0.0), edge2=(0.0, 1.0, 0.0), edge3=(0.0, 0.0, 1.0)) -> Volume:
    """Parallelepiped spanned by three edges from `corner` (unit cube by default)."""
    c = _vec(corner, "corner")
    e1, e2, e3 = (_vec(e, "edge") for e in (edge1, edge2, edge3))
    if abs(np.dot(e1, np.cross(e2, e3))) == 0.0:
        raise DomainError("box edges must be linearly independent")
    return Volume(
        lambda s, t, u: _place(c, (s, e1), (t, e2), (u, e3)), 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, name="box"
    )
