"""Charge and current distributions and the fields they produce.

Electric fields come from Coulomb superposition over the charge, magnetic
fields from the Biot-Savart law for line currents::

    B(r) = -mu0 I / (4 pi) * integral over C of (r - r') / |r - r'|^3 x dl'

All quantities are SI: coulombs, amperes, meters, N/C, tesla.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .calculus import (
    DEFAULT_CURVE_N,
    DEFAULT_SURFACE_N,
    DEFAULT_VOLUME_N,
    crossed_line_integral,
    curve_sample,
    scalar_line_integral,
    scalar_surface_integral,
    scalar_volume_integral,
    surface_sample,
    vector_line_integral,
    vector_surface_integral,
    vector_volume_integral,
    volume_sample,
)
from .domains import Curve, Surface, Volume
from .fields import FieldSingularityError, ScalarField, VectorField, as_points
from .geometry import Position

__all__ = [
    "EPSILON_0",
    "MU_0",
    "PhysicalConstants",
    "SINGULARITY_RADIUS",
    "PointCharge",
    "LineCharge",
    "SurfaceCharge",
    "VolumeCharge",
    "MultipleCharges",
    "LineCurrent",
    "MultipleCurrents",
    "ChargeDistribution",
    "CurrentDistribution",
    "e_field",
    "b_field",
    "b_field_from_line_current",
    "total_charge",
]

EPSILON_0 = 8.8541878128e-12  # F/m
MU_0 = 4e-7 * math.pi  # H/m

# probes closer than this to a source point are rejected
SINGULARITY_RADIUS = 1e-12

# probe-source pairs per vectorized block
_BLOCK_PAIRS = 1 << 16


@dataclass(frozen=True)
class PhysicalConstants:
    epsilon0: float = EPSILON_0
    mu0: float = MU_0


@dataclass(frozen=True)
class PointCharge:
    charge: float
    at: Position


@dataclass(frozen=True)
class LineCharge:
    density: ScalarField  # C/m
    along: Curve
    n: int = DEFAULT_CURVE_N


@dataclass(frozen=True)
class SurfaceCharge:
    density: ScalarField  # C/m^2
    on: Surface
    n: int = DEFAULT_SURFACE_N


@dataclass(frozen=True)
class VolumeCharge:
    density: ScalarField  # C/m^3
    within: Volume
    n: int = DEFAULT_VOLUME_N


@dataclass(frozen=True)
class MultipleCharges:
    members: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))


ChargeDistribution = Union[PointCharge, LineCharge, SurfaceCharge, VolumeCharge, MultipleCharges]


@dataclass(frozen=True)
class LineCurrent:
    current: float  # A
    along: Curve
    n: int = DEFAULT_CURVE_N


@dataclass(frozen=True)
class MultipleCurrents:
    members: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))


CurrentDistribution = Union[LineCurrent, MultipleCurrents]


def _position_array(p) -> np.ndarray:
    return as_points(p).astype(float)


def _inverse_square_kernel(probes: np.ndarray, density=None):
    """Integrand ``r' -> [rho(r')] (r - r') / |r - r'|^3`` for a block of probes.

    The returned callable maps source positions ``(N, 3)`` to an array of
    shape ``probes.shape[:-1] + (N, 3)``.
    """

    def integrand(sources):
        d = probes[..., None, :] - sources
        r2 = np.einsum("...i,...i->...", d, d)
        close = r2 < SINGULARITY_RADIUS**2
        if np.any(close):
            idx = np.argwhere(close)[0]
            probe = Position(*map(float, probes[tuple(idx[:-1])]))
            raise FieldSingularityError("field point coincides with a source sample", probe)
        w = 1.0 / (r2 * np.sqrt(r2))
        if density is not None:
            w *= density.evaluate(sources)
        d *= w[..., None]
        return d

    return integrand


def _blocked(points: np.ndarray, fn, n_sources: int) -> np.ndarray:
    flat = points.reshape(-1, 3)
    if len(flat) == 0:
        return np.zeros(points.shape)
    step = max(1, _BLOCK_PAIRS // max(n_sources, 1))
    out = np.concatenate([fn(flat[i:i + step]) for i in range(0, len(flat), step)])
    return out.reshape(points.shape)


def _point_charge_field(q: float, at: Position, k: float):
    src = _position_array(at)

    def E(points):
        d = points - src
        dist = np.linalg.norm(d, axis=-1)
        close = dist < SINGULARITY_RADIUS
        if np.any(close):
            idx = np.argwhere(close)[0]
            raise FieldSingularityError("field point coincides with a point charge",
                                        Position(*map(float, points[tuple(idx)])))
        return k * q * d / dist[..., None] ** 3

    return E


def e_field(dist, epsilon0: float = EPSILON_0) -> VectorField:
    """Electric field produced by a charge distribution.

    A point charge gives ``q (r - r') / (4 pi eps0 |r - r'|^3)``; continuous
    distributions integrate the same kernel weighted by their density over
    their curve, surface or volume; a collection sums its members.
    """
    k = 1.0 / (4 * math.pi * epsilon0)
    if isinstance(dist, PointCharge):
        return VectorField(_point_charge_field(dist.charge, dist.at, k), name="E point")
    if isinstance(dist, LineCharge):
        integral, sampler, domain = vector_line_integral, curve_sample(dist.n), dist.along
        n_sources = dist.n
    elif isinstance(dist, SurfaceCharge):
        integral, sampler, domain = vector_surface_integral, surface_sample(dist.n), dist.on
        n_sources = 2 * dist.n**2
    elif isinstance(dist, VolumeCharge):
        integral, sampler, domain = vector_volume_integral, volume_sample(dist.n), dist.within
        n_sources = dist.n**3
    elif isinstance(dist, MultipleCharges):
        parts = [e_field(m, epsilon0) for m in dist.members]
        return VectorField(lambda p: sum((f.evaluate(p) for f in parts), np.zeros(np.shape(p))),
                           name="E multiple")
    else:
        raise TypeError(f"not a charge distribution: {dist!r}")

    density = dist.density
    return VectorField(
        lambda p: _blocked(
            p, lambda block: k * integral(sampler, _inverse_square_kernel(block, density), domain), n_sources
        ),
        name="E continuous",
    )


def b_field_from_line_current(current: float, curve: Curve, n: int = DEFAULT_CURVE_N,
                              mu0: float = MU_0) -> VectorField:
    """Biot-Savart field of a steady current along `curve` (tesla)."""
    coeff = -mu0 * current / (4 * math.pi)
    sampler = curve_sample(n)
    return VectorField(
        lambda p: _blocked(p, lambda block: coeff * crossed_line_integral(
            sampler, _inverse_square_kernel(block), curve), n),
        name="B line current",
    )


def b_field(dist, mu0: float = MU_0) -> VectorField:
    """Magnetic field produced by a current distribution."""
    if isinstance(dist, LineCurrent):
        return b_field_from_line_current(dist.current, dist.along, dist.n, mu0)
    if isinstance(dist, MultipleCurrents):
        parts = [b_field(m, mu0) for m in dist.members]
        return VectorField(lambda p: sum((f.evaluate(p) for f in parts), np.zeros(np.shape(p))),
                           name="B multiple")
    raise TypeError(f"not a current distribution: {dist!r}")


def total_charge(dist) -> float:
    """Total charge in coulombs, integrating densities with the default samplers."""
    if isinstance(dist, PointCharge):
        return float(dist.charge)
    if isinstance(dist, LineCharge):
        return scalar_line_integral(curve_sample(dist.n), dist.density, dist.along)
    if isinstance(dist, SurfaceCharge):
        return scalar_surface_integral(surface_sample(dist.n), dist.density, dist.on)
    if isinstance(dist, VolumeCharge):
        return scalar_volume_integral(volume_sample(dist.n), dist.density, dist.within)
    if isinstance(dist, MultipleCharges):
        return float(sum(total_charge(m) for m in dist.members))
    raise TypeError(f"not a charge distribution: {dist!r}")
