"""Deterministic SVG output for walks and grid patches.

Only ``svg``, ``polyline`` and ``circle`` elements are written.  Numbers
are printed with 6 decimals and the y axis is flipped so that "up" in the
grid is up on the page.  Grids of dimension 3 or more are drawn with a
fixed oblique projection; this is presentation only.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import DomainError
from .grid import GridSpec, Vertex, embed_vertex, step
from .walk import Walk, decode

__all__ = ["RenderStyle", "render_svg", "render_grid_svg"]

_PALETTE = ("#000000", "#1f5fbf", "#bf3f1f", "#2f8f2f", "#7f3fbf", "#bf8f1f")


@dataclass(frozen=True)
class RenderStyle:
    scale: float = 100.0         # output units per grid unit
    stroke_width: float = 0.05   # grid units
    margin: float = 0.05         # fraction of the larger bbox side
    draw_vertices: bool = False

    def __post_init__(self):
        if self.scale <= 0:
            raise DomainError("scale must be positive")
        if self.margin < 0:
            raise DomainError("margin must be non-negative")


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _to_plane(p: Sequence[float]) -> tuple[float, float]:
    if not p:
        return 0.0, 0.0
    if len(p) == 1:
        return p[0], 0.0
    x, y = p[0], p[1]
    for i, z in enumerate(p[2:]):
        f = 0.6**i
        x += 0.5 * f * z
        y += 0.35 * f * z
    return x, y


def _document(polylines: list[list[tuple[float, float]]], style: RenderStyle, mono: bool = False) -> str:
    s = style.scale
    lines = [[(x * s, -y * s) for x, y in pl] for pl in polylines]
    xs = [x for pl in lines for x, _ in pl] or [0.0]
    ys = [y for pl in lines for _, y in pl] or [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    # a degenerate extent is padded by one grid unit on each side
    if x1 - x0 == 0:
        x0, x1 = x0 - s, x1 + s
    if y1 - y0 == 0:
        y0, y1 = y0 - s, y1 + s
    m = style.margin * max(x1 - x0, y1 - y0)
    x0, y0, w, h = x0 - m, y0 - m, (x1 - x0) + 2 * m, (y1 - y0) + 2 * m

    sw = _fmt(style.stroke_width * s)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(w)}" height="{_fmt(h)}" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
    ]
    for i, pl in enumerate(lines):
        color = _PALETTE[0 if mono else i % len(_PALETTE)]
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pl)
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="{sw}" '
            'stroke-linejoin="round" stroke-linecap="round"/>'
        )
        if style.draw_vertices:
            r = _fmt(style.stroke_width * s * 1.5)
            out.extend(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{r}" fill="{color}"/>' for x, y in pl)
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(grid: GridSpec, walks: Sequence[Walk], style: RenderStyle | None = None) -> str:
    """One polyline per walk, in input order."""
    style = style or RenderStyle()
    polylines = []
    for w in walks:
        if w.grid != grid:
            raise DomainError("walk is on a different grid")
        polylines.append([_to_plane(embed_vertex(grid, v)) for v in decode(w)])
    return _document(polylines, style)


def render_grid_svg(grid: GridSpec, radius: int = 2, style: RenderStyle | None = None) -> str:
    """Every edge leaving a vertex in the lattice box [-radius, radius]^d."""
    style = style or RenderStyle(draw_vertices=True)
    segments = []
    for lattice in product(range(-radius, radius + 1), repeat=grid.dimension):
        for a in range(len(grid.anchors)):
            v = Vertex(a, lattice)
            for k in range(1, grid.generator_count + 1):
                w = step(grid, v, k)
                if w is not None:
                    segments.append([_to_plane(embed_vertex(grid, v)), _to_plane(embed_vertex(grid, w))])
    return _document(segments, style, mono=True)
