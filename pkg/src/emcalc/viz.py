"""Arrow-grid pictures of vector fields with strength shown as darkness.

Every arrow has the same length; only its direction and its gray level
vary. A monotone `scale` applied to the field magnitude decides how fast
arrows darken, so a field that is huge in one spot does not leave the
rest of the picture blank.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .fields import FieldEvaluationError, VectorField
from .geometry import DomainError

__all__ = ["SCALES", "PlaneSlice", "RenderSpec", "RenderResult", "render_vector_field", "svg_document"]

log = logging.getLogger(__name__)

SCALES: dict[str, Callable] = {
    "cbrt": np.cbrt,
    "linear": lambda m: np.asarray(m, dtype=float),
    "log1p": np.log1p,
}

CELL_PX = 40


@dataclass(frozen=True)
class PlaneSlice:
    """Which plane to draw and how 3-vectors become 2-D arrows.

    `embed` maps arrays ``(u, v)`` to positions ``(..., 3)``; `project`
    maps vectors ``(..., 3)`` to ``(..., 2)``.
    """

    embed: Callable
    project: Callable
    u_range: tuple[float, float]
    v_range: tuple[float, float]

    def __post_init__(self):
        for r in (self.u_range, self.v_range):
            if not r[0] < r[1]:
                raise DomainError(f"slice range {r} is empty")

    @classmethod
    def plane(cls, origin, u_axis, v_axis, u_range, v_range) -> PlaneSlice:
        o, U, V = (np.asarray(a, dtype=float) for a in (origin, u_axis, v_axis))

        def embed(u, v):
            u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
            return o + u[..., None] * U + v[..., None] * V

        def project(F):
            return np.stack([F @ U, F @ V], axis=-1)

        return cls(embed, project, tuple(map(float, u_range)), tuple(map(float, v_range)))

    @classmethod
    def xy(cls, u_range=(-2.0, 2.0), v_range=(-2.0, 2.0), z=0.0) -> PlaneSlice:
        return cls.plane((0, 0, z), (1, 0, 0), (0, 1, 0), u_range, v_range)

    @classmethod
    def yz(cls, u_range=(-2.0, 2.0), v_range=(-2.0, 2.0), x=0.0) -> PlaneSlice:
        return cls.plane((x, 0, 0), (0, 1, 0), (0, 0, 1), u_range, v_range)

    @classmethod
    def xz(cls, u_range=(-2.0, 2.0), v_range=(-2.0, 2.0), y=0.0) -> PlaneSlice:
        return cls.plane((0, y, 0), (1, 0, 0), (0, 0, 1), u_range, v_range)

    def cell_centers(self, n: int) -> tuple[np.ndarray, np.ndarray]:
        """``(u, v)`` grids of shape ``(n, n)``, indexed ``[i_u, i_v]``."""
        (u0, u1), (v0, v1) = self.u_range, self.v_range
        k = (np.arange(n) + 0.5) / n
        return np.meshgrid(u0 + k * (u1 - u0), v0 + k * (v1 - v0), indexing="ij")


@dataclass(frozen=True)
class RenderSpec:
    scale: Callable = np.cbrt
    grid_n: int = 20
    output_path: str | Path = "field.svg"
    arrow_length: float = 0.8  # fraction of the cell size

    def __post_init__(self):
        if isinstance(self.grid_n, bool) or int(self.grid_n) != self.grid_n or self.grid_n < 2:
            raise ValueError(f"grid_n must be an integer >= 2, got {self.grid_n!r}")
        if not 0 < self.arrow_length <= 1:
            raise ValueError("arrow_length must be in (0, 1]")


@dataclass
class RenderResult:
    path: Path
    arrow_count: int
    omitted: int
    max_magnitude: float
    intensity: np.ndarray  # (n, n), nan where no arrow was drawn
    warnings: list[str] = field(default_factory=list)


def _sample(F: VectorField, points: np.ndarray, warnings: list[str]) -> np.ndarray:
    try:
        values = F.evaluate(points)
        if np.all(np.isfinite(values)):
            return values
    except (FieldEvaluationError, DomainError):
        pass
    # retry cell by cell so one bad sample only blanks its own cell
    values = np.full(points.shape, np.nan)
    for idx in np.ndindex(points.shape[:-1]):
        try:
            values[idx] = F.evaluate(points[idx])
        except (FieldEvaluationError, DomainError) as exc:
            warnings.append(f"cell {idx}: {exc}")
            continue
        if not np.all(np.isfinite(values[idx])):
            warnings.append(f"cell {idx}: non-finite field value")
            values[idx] = np.nan
    return values


def _intensity(scale, mags: np.ndarray) -> np.ndarray:
    good = np.isfinite(mags)
    scaled = np.full(mags.shape, np.nan)
    zero = float(np.asarray(scale(np.zeros(1)))[0])
    scaled[good] = np.asarray(scale(mags[good]), dtype=float) - zero
    order = np.argsort(mags[good], kind="stable")
    if np.any(np.diff(scaled[good][order]) < 0):
        raise ValueError("scale function must be non-decreasing on [0, inf)")
    top = np.nanmax(scaled) if np.any(good) else 0.0
    if not top > 0:
        return np.where(good, 0.0, np.nan)
    return scaled / top


def _gray(intensity: float) -> int:
    return int(math.floor(255 * (1.0 - intensity) + 0.5))


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def svg_document(n: int, directions: np.ndarray, intensity: np.ndarray, arrow_length: float,
                 aspect: tuple[float, float] = (1.0, 1.0)) -> tuple[str, int]:
    """SVG text for an ``n x n`` arrow grid; returns ``(text, arrow_count)``.

    `directions` holds projected 2-D field vectors ``(n, n, 2)`` indexed
    ``[i_u, i_v]``; cells with zero or undefined direction get no arrow.
    """
    width = height = CELL_PX * n
    cw, ch = width / n, height / n
    length = arrow_length * min(cw, ch)
    head = 0.3 * length
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    count = 0
    for i in range(n):
        for j in range(n):
            du, dv = directions[i, j]
            I = intensity[i, j]
            if not (np.isfinite(du) and np.isfinite(dv) and np.isfinite(I)):
                continue
            # pixel space: u to the right, v upward; scale by the range aspect
            px, py = du * aspect[0], -dv * aspect[1]
            norm = math.hypot(px, py)
            if norm == 0.0:
                continue
            px, py = px / norm, py / norm
            cx, cy = (i + 0.5) * cw, height - (j + 0.5) * ch
            x0, y0 = cx - 0.5 * length * px, cy - 0.5 * length * py
            x1, y1 = cx + 0.5 * length * px, cy + 0.5 * length * py
            bx, by = x1 - head * px, y1 - head * py
            lx, ly = bx - 0.5 * head * py, by + 0.5 * head * px
            rx, ry = bx + 0.5 * head * py, by - 0.5 * head * px
            k = _gray(float(I))
            color = f"rgb({k},{k},{k})"
            lines.append(
                f'<g class="arrow" data-cell="{i},{j}" stroke="{color}" fill="{color}">'
                f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" stroke-width="1.5"/>'
                f'<path d="M {_fmt(x1)} {_fmt(y1)} L {_fmt(lx)} {_fmt(ly)} L {_fmt(rx)} {_fmt(ry)} Z"/>'
                "</g>"
            )
            count += 1
    lines.append("</svg>")
    return "\n".join(lines) + "\n", count


def render_vector_field(spec: RenderSpec, plane: PlaneSlice, F: VectorField) -> RenderResult:
    """Draw `F` on `plane` as a ``grid_n x grid_n`` grid of shaded arrows and write the SVG."""
    if not isinstance(F, VectorField):
        F = VectorField(F)
    n = int(spec.grid_n)
    warnings: list[str] = []
    u, v = plane.cell_centers(n)
    values = _sample(F, plane.embed(u, v), warnings)
    for w in warnings:
        log.warning("render: %s", w)
    mags = np.linalg.norm(values, axis=-1)
    directions = np.asarray(plane.project(np.nan_to_num(values)), dtype=float)
    directions[~np.isfinite(mags)] = np.nan
    intensity = _intensity(spec.scale, mags)
    drawn = np.isfinite(intensity) & (np.hypot(directions[..., 0], directions[..., 1]) > 0)
    intensity = np.where(drawn, intensity, np.nan)

    du = plane.u_range[1] - plane.u_range[0]
    dv = plane.v_range[1] - plane.v_range[0]
    text, count = svg_document(n, directions, intensity, spec.arrow_length, aspect=(1.0 / du, 1.0 / dv))
    path = Path(spec.output_path)
    path.write_text(text, encoding="utf-8")
    max_mag = float(np.nanmax(mags)) if np.any(np.isfinite(mags)) else 0.0
    return RenderResult(path, count, n * n - count, max_mag, intensity, warnings)
