"""Samplers, the nine line/surface/volume integrals, and differential operators.

A sampler turns a domain into a list of ``(position, element)`` pairs held
as two arrays: for curves the element is the vector length ``dl`` of a
small segment, for surfaces the vector area ``da`` of a small triangle, for
volumes the scalar volume ``dv`` of a small cell. Every integral is a sum
over those pairs, e.g. ``sum(F(r) . dl for r, dl in samples)``.

Fields handed to the integrals may be `ScalarField`/`VectorField`
instances or plain vectorized callables. Plain callables may add leading
axes to their output (one per probe point, say); the integrals reduce over
the sample axis only and return arrays in that case.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domains import Curve, Surface, Volume
from .fields import ScalarField, VectorField, as_points
from .geometry import Position, Vec3

__all__ = [
    "DEFAULT_STEP",
    "DEFAULT_CURVE_N",
    "DEFAULT_SURFACE_N",
    "DEFAULT_VOLUME_N",
    "Samples",
    "curve_sample",
    "surface_sample",
    "volume_sample",
    "signed_volume",
    "scalar_line_integral",
    "vector_line_integral",
    "dotted_line_integral",
    "crossed_line_integral",
    "scalar_surface_integral",
    "vector_surface_integral",
    "dotted_surface_integral",
    "scalar_volume_integral",
    "vector_volume_integral",
    "INTEGRALS",
    "derivative",
    "gradient",
    "divergence",
    "curl",
]

DEFAULT_STEP = 1e-6
DEFAULT_CURVE_N = 1000
DEFAULT_SURFACE_N = 200
DEFAULT_VOLUME_N = 40


@dataclass(frozen=True, eq=False)
class Samples:
    """Sample positions ``(N, 3)`` and their elements (``(N, 3)`` or ``(N,)``)."""

    positions: np.ndarray
    elements: np.ndarray

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        for p, e in zip(self.positions, self.elements):
            elem = float(e) if np.ndim(e) == 0 else Vec3(*map(float, e))
            yield Position(*map(float, p)), elem


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"sampler resolution must be a positive integer, got {n!r}")
    return int(n)


def curve_sample(n: int = DEFAULT_CURVE_N):
    """Split a curve into `n` segments of equal parameter width.

    Each segment yields the image of its parameter midpoint and the chord
    from its start point to its end point.
    """
    n = _check_n(n)

    def sampler(curve: Curve) -> Samples:
        width = curve.end - curve.start
        ends = curve.points(curve.start + width * (np.arange(n + 1) / n))
        mids = curve.points(curve.start + width * ((np.arange(n) + 0.5) / n))
        return Samples(mids, ends[1:] - ends[:-1])

    return sampler


def surface_sample(n: int = DEFAULT_SURFACE_N):
    """Split a surface into ``2 n^2`` triangles.

    The parameter domain is cut into an ``n x n`` grid (inner limits honored),
    each cell into two triangles along its ``(0,0)-(1,1)`` diagonal. Each
    triangle yields the centroid of its vertices and its vector area
    ``(v1 - v0) x (v2 - v0) / 2``.
    """
    n = _check_n(n)

    def sampler(surface: Surface) -> Samples:
        a = np.arange(n + 1) / n
        V = surface.unit_points(*np.meshgrid(a, a, indexing="ij"))
        v00, v10, v11, v01 = V[:-1, :-1], V[1:, :-1], V[1:, 1:], V[:-1, 1:]
        centroids = np.stack([(v00 + v10 + v11) / 3, (v00 + v11 + v01) / 3], axis=2)
        areas = np.stack(
            [0.5 * np.cross(v10 - v00, v11 - v00), 0.5 * np.cross(v11 - v00, v01 - v00)], axis=2
        )
        return Samples(centroids.reshape(-1, 3), areas.reshape(-1, 3))

    return sampler


def _cell_edges(volume: Volume, n: int):
    mid = (np.arange(n) + 0.5) / n
    face = np.arange(n + 1) / n
    centers = volume.unit_points(*np.meshgrid(mid, mid, mid, indexing="ij"))
    ea = np.diff(volume.unit_points(*np.meshgrid(face, mid, mid, indexing="ij")), axis=0)
    eb = np.diff(volume.unit_points(*np.meshgrid(mid, face, mid, indexing="ij")), axis=1)
    ec = np.diff(volume.unit_points(*np.meshgrid(mid, mid, face, indexing="ij")), axis=2)
    triple = np.sum(ea * np.cross(eb, ec), axis=-1)
    return centers, triple


def volume_sample(n: int = DEFAULT_VOLUME_N):
    """Split a volume into ``n^3`` parameter cells.

    Each cell yields the image of its parameter midpoint and ``|det J|``
    times the cell's parameter volume, with the Jacobian columns taken as
    differences of the images across the cell through its midpoint.
    """
    n = _check_n(n)

    def sampler(volume: Volume) -> Samples:
        centers, triple = _cell_edges(volume, n)
        return Samples(centers.reshape(-1, 3), np.abs(triple).reshape(-1))

    return sampler


def signed_volume(volume: Volume, n: int = DEFAULT_VOLUME_N) -> float:
    """Oriented volume; negative for a left-handed parametrization."""
    _, triple = _cell_edges(volume, _check_n(n))
    return float(np.sum(triple))


# integrals


def _values(field, points, vector: bool) -> np.ndarray:
    if isinstance(field, ScalarField):
        if vector:
            raise TypeError("this integral needs a vector field, got a scalar field")
        return field.evaluate(points)
    if isinstance(field, VectorField):
        if not vector:
            raise TypeError("this integral needs a scalar field, got a vector field")
        return field.evaluate(points)
    return np.asarray(field(points), dtype=float)


def _scalar_result(x):
    x = np.asarray(x)
    return float(x) if x.ndim == 0 else x


def _vector_result(x):
    x = np.asarray(x)
    return Vec3(*map(float, x)) if x.shape == (3,) else x


def scalar_line_integral(sampler, f, curve: Curve):
    """Integral of a scalar field times arc length, ``sum f |dl|``."""
    s = sampler(curve)
    return _scalar_result(np.sum(_values(f, s.positions, False) * np.linalg.norm(s.elements, axis=-1), axis=-1))


def vector_line_integral(sampler, F, curve: Curve):
    """``sum F |dl|``"""
    s = sampler(curve)
    lengths = np.linalg.norm(s.elements, axis=-1)[:, None]
    return _vector_result(np.sum(_values(F, s.positions, True) * lengths, axis=-2))


def dotted_line_integral(sampler, F, curve: Curve):
    """Circulation ``sum F . dl``."""
    s = sampler(curve)
    return _scalar_result(np.sum(np.sum(_values(F, s.positions, True) * s.elements, axis=-1), axis=-1))


def crossed_line_integral(sampler, F, curve: Curve):
    """``sum F x dl``"""
    s = sampler(curve)
    return _vector_result(np.sum(np.cross(_values(F, s.positions, True), s.elements), axis=-2))


def scalar_surface_integral(sampler, f, surface: Surface):
    """``sum f |da|``"""
    s = sampler(surface)
    return _scalar_result(np.sum(_values(f, s.positions, False) * np.linalg.norm(s.elements, axis=-1), axis=-1))


def vector_surface_integral(sampler, F, surface: Surface):
    """``sum F |da|``"""
    s = sampler(surface)
    areas = np.linalg.norm(s.elements, axis=-1)[:, None]
    return _vector_result(np.sum(_values(F, s.positions, True) * areas, axis=-2))


def dotted_surface_integral(sampler, F, surface: Surface):
    """Flux ``sum F . da``."""
    s = sampler(surface)
    return _scalar_result(np.sum(np.sum(_values(F, s.positions, True) * s.elements, axis=-1), axis=-1))


def scalar_volume_integral(sampler, f, volume: Volume):
    """``sum f dv``"""
    s = sampler(volume)
    return _scalar_result(np.sum(_values(f, s.positions, False) * s.elements, axis=-1))


def vector_volume_integral(sampler, F, volume: Volume):
    """``sum F dv``"""
    s = sampler(volume)
    return _vector_result(np.sum(_values(F, s.positions, True) * s.elements[:, None], axis=-2))


# name -> (function, field kind, domain kind, result kind)
INTEGRALS = {
    "scalarLineIntegral": (scalar_line_integral, "scalar", "curve", "scalar"),
    "vectorLineIntegral": (vector_line_integral, "vector", "curve", "vector"),
    "dottedLineIntegral": (dotted_line_integral, "vector", "curve", "scalar"),
    "crossedLineIntegral": (crossed_line_integral, "vector", "curve", "vector"),
    "scalarSurfaceIntegral": (scalar_surface_integral, "scalar", "surface", "scalar"),
    "vectorSurfaceIntegral": (vector_surface_integral, "vector", "surface", "vector"),
    "dottedSurfaceIntegral": (dotted_surface_integral, "vector", "surface", "scalar"),
    "scalarVolumeIntegral": (scalar_volume_integral, "scalar", "volume", "scalar"),
    "vectorVolumeIntegral": (vector_volume_integral, "vector", "volume", "vector"),
}


# differential operators


def derivative(dt: float, f, t: float) -> float:
    """Central difference ``(f(t + dt/2) - f(t - dt/2)) / dt``."""
    return (f(t + dt / 2) - f(t - dt / 2)) / dt


def _as_scalar_field(f) -> ScalarField:
    return f if isinstance(f, ScalarField) else ScalarField(f)


def _as_vector_field(F) -> VectorField:
    return F if isinstance(F, VectorField) else VectorField(F)


def _check_step(d: float) -> float:
    d = float(d)
    if not d > 0:
        raise ValueError(f"finite-difference step must be positive, got {d}")
    return d


def _partials(evaluate, points, d):
    """``[(g(p + d/2 e_i) - g(p - d/2 e_i)) / d for i in x, y, z]``"""
    out = []
    for i in range(3):
        h = np.zeros(3)
        h[i] = d / 2
        out.append((evaluate(points + h) - evaluate(points - h)) / d)
    return out


def gradient(d: float, f) -> VectorField:
    """Central-difference gradient of a scalar field with step `d`."""
    d, f = _check_step(d), _as_scalar_field(f)
    return VectorField(lambda p: np.stack(_partials(f.evaluate, as_points(p), d), axis=-1),
                       name=f"grad {f.name}")


def divergence(d: float, F) -> ScalarField:
    """Central-difference divergence of a vector field with step `d`."""
    d, F = _check_step(d), _as_vector_field(F)

    def div(p):
        dx, dy, dz = _partials(F.evaluate, as_points(p), d)
        return dx[..., 0] + dy[..., 1] + dz[..., 2]

    return ScalarField(div, name=f"div {F.name}")


def curl(d: float, F) -> VectorField:
    """Central-difference curl of a vector field with step `d`."""
    d, F = _check_step(d), _as_vector_field(F)

    def rot(p):
        dx, dy, dz = _partials(F.evaluate, as_points(p), d)
        return np.stack(
            [dy[..., 2] - dz[..., 1], dz[..., 0] - dx[..., 2], dx[..., 1] - dy[..., 0]], axis=-1
        )

    return VectorField(rot, name=f"curl {F.name}")
