"""Scalar and vector fields over 3-space.

A field wraps a function of an array of positions with trailing axis 3.
A scalar field returns the leading shape, a vector field the full shape::

    f(points)  # points.shape == (..., 3)  ->  (...,)
    F(points)  # points.shape == (..., 3)  ->  (..., 3)

Calling a field on a single `Position` returns a float or a `Vec3`.
Fields combine with ``+ - * /`` so that expressions read like the math::

    F = -Z * YHAT + Y * ZHAT
"""

from __future__ import annotations

import numbers

import numpy as np

from .geometry import DomainError, Position, Vec3

__all__ = [
    "FieldEvaluationError",
    "FieldSingularityError",
    "ScalarField",
    "VectorField",
    "as_points",
    "X",
    "Y",
    "Z",
    "XHAT",
    "YHAT",
    "ZHAT",
    "SHAT",
    "PHIHAT",
    "RHAT",
    "THETAHAT",
    "unit_basis_field",
    "position_field",
    "constant_vector_field",
]


class FieldEvaluationError(ArithmeticError):
    """A field could not be evaluated; `position` names the offending point."""

    def __init__(self, message: str, position: Position | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at ({position.x!r}, {position.y!r}, {position.z!r})"
        super().__init__(message)


class FieldSingularityError(FieldEvaluationError):
    """Probe coincides with a point source or a source sample."""


def as_points(p) -> np.ndarray:
    if isinstance(p, (Position, Vec3)):
        return np.array([p.x, p.y, p.z])
    a = np.asarray(p, dtype=float)
    if a.shape[-1:] != (3,):
        raise ValueError(f"positions need a trailing axis of length 3, got shape {a.shape}")
    return a


def _is_scalar(c) -> bool:
    return isinstance(c, numbers.Real) and not isinstance(c, bool)


class ScalarField:
    """A function from positions to real numbers."""

    def __init__(self, func, name: str | None = None):
        self.func = func
        self.name = name or getattr(func, "__name__", "scalar field")

    @classmethod
    def pointwise(cls, fn, name: str | None = None) -> ScalarField:
        """Wrap a per-point function ``Position -> float`` (slow, general)."""

        def func(points):
            flat = points.reshape(-1, 3)
            out = np.array([float(fn(Position(*map(float, q)))) for q in flat])
            return out.reshape(points.shape[:-1])

        return cls(func, name or getattr(fn, "__name__", None))

    @classmethod
    def constant(cls, c: float) -> ScalarField:
        c = float(c)
        return cls(lambda p: np.full(p.shape[:-1], c), name=repr(c))

    def evaluate(self, points) -> np.ndarray:
        points = as_points(points)
        out = np.asarray(self.func(points), dtype=float)
        if out.shape != points.shape[:-1]:
            out = np.broadcast_to(out, points.shape[:-1])
        return out

    def __call__(self, p):
        if isinstance(p, Position):
            return float(self.evaluate(as_points(p)))
        return self.evaluate(p)

    def __repr__(self):
        return f"ScalarField({self.name})"

    # algebra

    def __add__(self, other):
        if _is_scalar(other):
            other = ScalarField.constant(other)
        if not isinstance(other, ScalarField):
            return NotImplemented
        return ScalarField(lambda p: self.evaluate(p) + other.evaluate(p))

    __radd__ = __add__

    def __neg__(self):
        return ScalarField(lambda p: -self.evaluate(p))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = float(other)
            return ScalarField(lambda p: c * self.evaluate(p))
        if isinstance(other, ScalarField):
            return ScalarField(lambda p: self.evaluate(p) * other.evaluate(p))
        if isinstance(other, VectorField):
            return VectorField(lambda p: self.evaluate(p)[..., None] * other.evaluate(p))
        if isinstance(other, Vec3):
            return self * constant_vector_field(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (1.0 / float(other))
        if isinstance(other, ScalarField):
            return ScalarField(lambda p: self.evaluate(p) / other.evaluate(p))
        return NotImplemented

    def __pow__(self, k):
        if not _is_scalar(k):
            return NotImplemented
        return ScalarField(lambda p: self.evaluate(p) ** k)


class VectorField:
    """A function from positions to 3-vectors."""

    def __init__(self, func, name: str | None = None):
        self.func = func
        self.name = name or getattr(func, "__name__", "vector field")

    @classmethod
    def pointwise(cls, fn, name: str | None = None) -> VectorField:
        """Wrap a per-point function ``Position -> Vec3`` (slow, general)."""

        def func(points):
            flat = points.reshape(-1, 3)
            out = np.array([tuple(fn(Position(*map(float, q)))) for q in flat], dtype=float)
            return out.reshape(points.shape)

        return cls(func, name or getattr(fn, "__name__", None))

    @classmethod
    def from_components(cls, fx, fy, fz) -> VectorField:
        comps = [ScalarField.constant(c) if _is_scalar(c) else c for c in (fx, fy, fz)]
        return cls(lambda p: np.stack([c.evaluate(p) for c in comps], axis=-1))

    def evaluate(self, points) -> np.ndarray:
        points = as_points(points)
        out = np.asarray(self.func(points), dtype=float)
        if out.shape != points.shape:
            out = np.broadcast_to(out, points.shape)
        return out

    def __call__(self, p):
        if isinstance(p, Position):
            return Vec3.from_array(self.evaluate(as_points(p)))
        return self.evaluate(p)

    def __repr__(self):
        return f"VectorField({self.name})"

    def component(self, i: int) -> ScalarField:
        return ScalarField(lambda p: self.evaluate(p)[..., i])

    def magnitude(self) -> ScalarField:
        return ScalarField(lambda p: np.linalg.norm(self.evaluate(p), axis=-1))

    def dot(self, other: VectorField) -> ScalarField:
        return ScalarField(lambda p: np.sum(self.evaluate(p) * other.evaluate(p), axis=-1))

    def cross(self, other: VectorField) -> VectorField:
        return VectorField(lambda p: np.cross(self.evaluate(p), other.evaluate(p)))

    def __add__(self, other):
        if isinstance(other, Vec3):
            other = constant_vector_field(other)
        if not isinstance(other, VectorField):
            return NotImplemented
        return VectorField(lambda p: self.evaluate(p) + other.evaluate(p))

    __radd__ = __add__

    def __neg__(self):
        return VectorField(lambda p: -self.evaluate(p))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = float(other)
            return VectorField(lambda p: c * self.evaluate(p))
        if isinstance(other, ScalarField):
            return other * self
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (1.0 / float(other))
        if isinstance(other, ScalarField):
            return VectorField(lambda p: self.evaluate(p) / other.evaluate(p)[..., None])
        return NotImplemented


def constant_vector_field(v) -> VectorField:
    a = np.asarray(tuple(v) if isinstance(v, Vec3) else v, dtype=float)
    return VectorField(lambda p: np.broadcast_to(a, p.shape).copy(), name=f"const{tuple(a)}")


X = ScalarField(lambda p: p[..., 0], name="x")
Y = ScalarField(lambda p: p[..., 1], name="y")
Z = ScalarField(lambda p: p[..., 2], name="z")

position_field = VectorField(lambda p: np.array(p, dtype=float), name="r")

XHAT = constant_vector_field((1.0, 0.0, 0.0))
YHAT = constant_vector_field((0.0, 1.0, 0.0))
ZHAT = constant_vector_field((0.0, 0.0, 1.0))


def _first_bad(points, mask) -> Position:
    idx = np.argwhere(mask)[0]
    return Position(*map(float, points[tuple(idx)]))


def _require_off_axis(points):
    s = np.hypot(points[..., 0], points[..., 1])
    bad = s == 0.0
    if np.any(bad):
        raise DomainError(f"basis undefined on singular locus: {_first_bad(points, bad)}")
    return s


def _require_off_origin(points):
    r = np.linalg.norm(points, axis=-1)
    bad = r == 0.0
    if np.any(bad):
        raise DomainError(f"basis undefined on singular locus: {_first_bad(points, bad)}")
    return r


def _shat(p):
    s = _require_off_axis(p)
    return np.stack([p[..., 0] / s, p[..., 1] / s, np.zeros_like(s)], axis=-1)


def _phihat(p):
    s = _require_off_axis(p)
    return np.stack([-p[..., 1] / s, p[..., 0] / s, np.zeros_like(s)], axis=-1)


def _rhat(p):
    r = _require_off_origin(p)
    return p / r[..., None]


def _thetahat(p):
    r = _require_off_origin(p)
    s = np.hypot(p[..., 0], p[..., 1])
    cos_t, sin_t = p[..., 2] / r, s / r
    # on the z-axis the azimuth convention phi = 0 applies
    safe = np.where(s > 0, s, 1.0)
    cos_p = np.where(s > 0, p[..., 0] / safe, 1.0)
    sin_p = np.where(s > 0, p[..., 1] / safe, 0.0)
    return np.stack([cos_t * cos_p, cos_t * sin_p, -sin_t], axis=-1)


SHAT = VectorField(_shat, name="shat")
PHIHAT = VectorField(_phihat, name="phihat")
RHAT = VectorField(_rhat, name="rhat")
THETAHAT = VectorField(_thetahat, name="thetahat")

_BASIS = {
    "xHat": XHAT,
    "yHat": YHAT,
    "zHat": ZHAT,
    "sHat": SHAT,
    "phiHat": PHIHAT,
    "rHat": RHAT,
    "thetaHat": THETAHAT,
}


def unit_basis_field(name: str) -> VectorField:
    """One of ``xHat yHat zHat sHat phiHat rHat thetaHat`` (case-insensitive)."""
    for key, field in _BASIS.items():
        if key.lower() == name.lower():
            return field
    raise KeyError(f"unknown basis field {name!r}; expected one of {sorted(_BASIS)}")
