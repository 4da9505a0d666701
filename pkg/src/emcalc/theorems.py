"""Numerical checks of the gradient, Stokes and divergence theorems.

Each checker evaluates both sides with the samplers and finite-difference
step it is given and reports them with their residuals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .calculus import (
    DEFAULT_STEP,
    curl,
    curve_sample,
    divergence,
    dotted_line_integral,
    dotted_surface_integral,
    gradient,
    scalar_line_integral,
    scalar_surface_integral,
    scalar_volume_integral,
    surface_sample,
    volume_sample,
)
from .domains import Curve, Surface, Volume, boundary_of_surface, boundary_of_volume
from .fields import ScalarField, VectorField
from .geometry import Vec3

__all__ = [
    "RESIDUAL_FLOOR",
    "NOISE_FLOOR",
    "TheoremReport",
    "check_gradient_theorem",
    "check_stokes",
    "check_divergence_theorem",
]

RESIDUAL_FLOOR = 1e-300
NOISE_FLOOR = 1e-9


def _norm(v) -> float:
    return float(np.linalg.norm(np.asarray(tuple(v) if hasattr(v, "x") else v, dtype=float)))


@dataclass(frozen=True)
class TheoremReport:
    """Both sides of a theorem and how far apart they are.

    The relative residual is ``|lhs - rhs| / max(|lhs|, |rhs|, 1e-300)``,
    so two exact zeros report 0. `scale` is the integral of the integrand's
    magnitude over the boundary; when both sides are round-off next to it
    the relative residual is meaningless, and `passed` accepts an absolute
    residual below ``NOISE_FLOOR * scale``.
    """

    lhs: float
    rhs: float
    absolute_residual: float
    relative_residual: float
    scale: float = 0.0

    @classmethod
    def from_sides(cls, lhs, rhs, scale: float = 0.0) -> TheoremReport:
        if hasattr(lhs, "x") or np.ndim(lhs) > 0:
            lhs, rhs = (Vec3(*map(float, tuple(v))) for v in (lhs, rhs))
            diff = _norm(lhs - rhs)
        else:
            lhs, rhs = float(lhs), float(rhs)
            diff = abs(lhs - rhs)
        return cls(lhs, rhs, diff, diff / max(_norm(lhs), _norm(rhs), RESIDUAL_FLOOR), float(scale))

    def passed(self, threshold: float = 1e-2) -> bool:
        return self.relative_residual < threshold or self.absolute_residual <= NOISE_FLOOR * self.scale


def _field(f, cls):
    return f if isinstance(f, cls) else cls(f)


def check_gradient_theorem(f, curve: Curve, d: float = DEFAULT_STEP, sampler=None) -> TheoremReport:
    """Line integral of ``grad f`` along `curve` against ``f(end) - f(start)``."""
    f = _field(f, ScalarField)
    sampler = sampler or curve_sample()
    grad = gradient(d, f)
    lhs = dotted_line_integral(sampler, grad, curve)
    ends = curve.points(np.array([curve.start, curve.end]))
    values = f.evaluate(ends)
    scale = scalar_line_integral(sampler, grad.magnitude(), curve) + float(np.max(np.abs(values)))
    return TheoremReport.from_sides(lhs, values[1] - values[0], scale)


def check_stokes(F, surface: Surface, d: float = DEFAULT_STEP, surface_sampler=None,
                 curve_sampler=None) -> TheoremReport:
    """Flux of ``curl F`` through `surface` against the circulation of ``F`` around its boundary."""
    F = _field(F, VectorField)
    surface_sampler = surface_sampler or surface_sample()
    curve_sampler = curve_sampler or curve_sample()
    lhs = dotted_surface_integral(surface_sampler, curl(d, F), surface)
    edge = boundary_of_surface(surface)
    rhs = dotted_line_integral(curve_sampler, F, edge)
    return TheoremReport.from_sides(lhs, rhs, scalar_line_integral(curve_sampler, F.magnitude(), edge))


def check_divergence_theorem(F, volume: Volume, d: float = DEFAULT_STEP, volume_sampler=None,
                             surface_sampler=None) -> TheoremReport:
    """Volume integral of ``div F`` against the outward flux of ``F`` through the boundary."""
    F = _field(F, VectorField)
    volume_sampler = volume_sampler or volume_sample()
    surface_sampler = surface_sampler or surface_sample()
    lhs = scalar_volume_integral(volume_sampler, divergence(d, F), volume)
    rhs, scale = 0.0, 0.0
    for face in boundary_of_volume(volume):
        rhs += dotted_surface_integral(surface_sampler, F, face)
        scale += scalar_surface_integral(surface_sampler, F.magnitude(), face)
    return TheoremReport.from_sides(lhs, rhs, scale)
