"""Three-vectors, points in space, and coordinate systems.

Positions are stored as Cartesian triples. Cylindrical ``(s, phi, z)`` and
spherical ``(r, theta, phi)`` coordinates follow the usual physics
conventions: ``s`` is the distance from the z-axis, ``r`` the distance from
the origin, ``theta`` the polar angle measured from +z and ``phi`` the
azimuth measured from +x toward +y. Extracted azimuths lie in ``(-pi, pi]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DomainError",
    "Vec3",
    "Position",
    "vec_add",
    "vec_scale",
    "dot",
    "cross",
    "magnitude",
    "normalize",
    "cart",
    "cyl",
    "sph",
    "from_cartesian",
    "from_cylindrical",
    "from_spherical",
    "cartesian_coordinates",
    "cylindrical_coordinates",
    "spherical_coordinates",
    "displacement",
    "cylindrical_to_cartesian",
    "spherical_to_cartesian",
    "orthonormal_frame",
]


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


@dataclass(frozen=True)
class Vec3:
    """A displacement or field value with Cartesian components."""

    x: float
    y: float
    z: float

    @classmethod
    def zero(cls) -> Vec3:
        return cls(0.0, 0.0, 0.0)

    @classmethod
    def from_array(cls, a) -> Vec3:
        a = np.asarray(a, dtype=float)
        if a.shape != (3,):
            raise ValueError(f"expected shape (3,), got {a.shape}")
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __add__(self, other: Vec3) -> Vec3:
        if not isinstance(other, Vec3):
            return NotImplemented
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vec3) -> Vec3:
        if not isinstance(other, Vec3):
            return NotImplemented
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> Vec3:
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, c) -> Vec3:
        if isinstance(c, Vec3):
            return NotImplemented
        c = float(c)
        return Vec3(c * self.x, c * self.y, c * self.z)

    __rmul__ = __mul__

    def __truediv__(self, c) -> Vec3:
        c = float(c)
        return Vec3(self.x / c, self.y / c, self.z / c)

    def dot(self, other: Vec3) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: Vec3) -> Vec3:
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def magnitude(self) -> float:
        # hypot avoids underflow for tiny components
        return math.hypot(self.x, self.y, self.z)

    def normalize(self) -> Vec3:
        m = self.magnitude()
        if m == 0.0:
            raise DomainError("zero-vector normalization")
        return self / m


def vec_add(a: Vec3, b: Vec3) -> Vec3:
    return a + b


def vec_scale(c: float, v: Vec3) -> Vec3:
    return c * v


def dot(a: Vec3, b: Vec3) -> float:
    return a.dot(b)


def cross(a: Vec3, b: Vec3) -> Vec3:
    """Right-handed cross product ``a x b``."""
    return a.cross(b)


def magnitude(v: Vec3) -> float:
    return v.magnitude()


def normalize(v: Vec3) -> Vec3:
    """Unit vector along `v`; raises `DomainError` for the zero vector."""
    return v.normalize()


@dataclass(frozen=True)
class Position:
    """A point in space, stored as its Cartesian triple (meters)."""

    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, a) -> Position:
        a = np.asarray(a, dtype=float)
        if a.shape != (3,):
            raise ValueError(f"expected shape (3,), got {a.shape}")
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def cartesian(self) -> tuple[float, float, float]:
        return cartesian_coordinates(self)

    def cylindrical(self) -> tuple[float, float, float]:
        return cylindrical_coordinates(self)

    def spherical(self) -> tuple[float, float, float]:
        return spherical_coordinates(self)


def from_cartesian(x: float, y: float, z: float) -> Position:
    return Position(float(x), float(y), float(z))


def from_cylindrical(s: float, phi: float, z: float) -> Position:
    if s < 0:
        raise DomainError(f"negative cylindrical radius s={s}")
    return Position(s * math.cos(phi), s * math.sin(phi), float(z))


def from_spherical(r: float, theta: float, phi: float) -> Position:
    if r < 0:
        raise DomainError(f"negative spherical radius r={r}")
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"polar angle theta={theta} outside [0, pi]")
    st = math.sin(theta)
    return Position(r * st * math.cos(phi), r * st * math.sin(phi), r * math.cos(theta))


# curried-style short names
def cart(x: float, y: float, z: float) -> Position:
    return from_cartesian(x, y, z)


def cyl(s: float, phi: float, z: float) -> Position:
    return from_cylindrical(s, phi, z)


def sph(r: float, theta: float, phi: float) -> Position:
    return from_spherical(r, theta, phi)


def cartesian_coordinates(p: Position) -> tuple[float, float, float]:
    return (p.x, p.y, p.z)


def _azimuth(x: float, y: float) -> float:
    # atan2 returns -pi for (x<0, y=-0.0); fold onto the documented branch
    phi = math.atan2(y, x)
    if phi == -math.pi:
        phi = math.pi
    return phi + 0.0


def cylindrical_coordinates(p: Position) -> tuple[float, float, float]:
    """``(s, phi, z)``; on the z-axis phi is reported as 0."""
    s = math.hypot(p.x, p.y)
    phi = _azimuth(p.x, p.y) if s > 0 else 0.0
    return (s, phi, p.z)


def spherical_coordinates(p: Position) -> tuple[float, float, float]:
    """``(r, theta, phi)``; at the origin theta is 0, on the z-axis phi is 0."""
    s = math.hypot(p.x, p.y)
    r = math.hypot(s, p.z)
    theta = math.atan2(s, p.z) if r > 0 else 0.0
    phi = _azimuth(p.x, p.y) if s > 0 else 0.0
    return (r, theta, phi)


def displacement(source: Position, target: Position) -> Vec3:
    """Vector from `source` to `target`."""
    return Vec3(target.x - source.x, target.y - source.y, target.z - source.z)


# array versions used by the shape library and the samplers


def cylindrical_to_cartesian(s, phi, z) -> np.ndarray:
    s, phi, z = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (s, phi, z)))
    return np.stack([s * np.cos(phi), s * np.sin(phi), z], axis=-1)


def spherical_to_cartesian(r, theta, phi) -> np.ndarray:
    r, theta, phi = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (r, theta, phi)))
    st = np.sin(theta)
    return np.stack([r * st * np.cos(phi), r * st * np.sin(phi), r * np.cos(theta)], axis=-1)


def orthonormal_frame(axis) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Right-handed frame ``(u, v, w)`` with ``w`` along `axis`.

    For ``axis = +z`` the frame is exactly ``(x, y, z)``.
    """
    w = np.asarray(tuple(axis) if isinstance(axis, Vec3) else axis, dtype=float)
    n = np.linalg.norm(w)
    if w.shape != (3,) or not n > 0:
        raise DomainError("axis must be a nonzero 3-vector")
    w = w / n
    helper = np.array([0.0, 1.0, 0.0])
    if abs(w @ helper) > 0.9:
        helper = np.array([0.0, 0.0, 1.0]) if w[1] > 0 else np.array([0.0, 0.0, -1.0])
    u = np.cross(helper, w)
    u /= np.linalg.norm(u)
    v = np.cross(w, u)
    return u, v, w
