"""Walks in index notation.

A walk is a start vertex plus a sequence of signed generator indices:
``+k`` follows generator k forwards, ``-k`` backwards.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import WalkError
from .grid import GridSpec, Vertex, applicable_steps, embed_vertex, is_edge, origin, step

__all__ = [
    "Walk",
    "WalkReport",
    "Displacement",
    "decode",
    "encode",
    "concat",
    "reverse",
    "neg_reverse",
    "classify",
    "net_displacement",
    "random_walk",
    "index_form",
    "point_form",
]


@dataclass(frozen=True)
class Walk:
    grid: GridSpec
    steps: tuple[int, ...] = ()
    start: Vertex | None = None

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(k) for k in self.steps))
        if self.start is None:
            object.__setattr__(self, "start", origin(self.grid))
        n = self.grid.generator_count
        for i, k in enumerate(self.steps):
            if k == 0 or abs(k) > n:
                raise WalkError(f"step {k} at position {i} outside +-1..{n}", i)

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class WalkReport:
    is_walk: bool
    is_eulerian: bool
    is_curve: bool
    is_closed: bool
    dimension: int

    def lines(self) -> list[str]:
        return [
            f"is_walk: {str(self.is_walk).lower()}",
            f"is_eulerian: {str(self.is_eulerian).lower()}",
            f"is_curve: {str(self.is_curve).lower()}",
            f"is_closed: {str(self.is_closed).lower()}",
            f"dimension: {self.dimension}",
        ]


@dataclass(frozen=True)
class Displacement:
    """End minus start: lattice difference plus the two anchor classes."""

    start_anchor: int
    end_anchor: int
    lattice: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return self.start_anchor == self.end_anchor and not any(self.lattice)


def _walk_from(grid: GridSpec, v: Vertex, steps: Sequence[int], base: int = 0) -> list[Vertex]:
    out = [v]
    for i, k in enumerate(steps):
        w = step(grid, v, k)
        if w is None:
            raise WalkError(
                f"step {k} at position {base + i} does not apply at anchor class {v.anchor}",
                base + i,
            )
        out.append(w)
        v = w
    return out


def decode(walk: Walk) -> list[Vertex]:
    """Vertex sequence of ``walk`` (length ``len(walk) + 1``)."""
    return _walk_from(walk.grid, walk.start, walk.steps)


def encode(grid: GridSpec, vertices: Sequence[Vertex]) -> Walk:
    if not vertices:
        raise WalkError("cannot encode an empty vertex sequence")
    steps = []
    for i, (v, w) in enumerate(zip(vertices, vertices[1:])):
        k = is_edge(grid, v, w)
        if k is None:
            raise WalkError(f"vertices {i} and {i + 1} are not adjacent", i)
        steps.append(k)
    return Walk(grid, tuple(steps), vertices[0])


def concat(c: Walk, d: Walk) -> Walk:
    """``c`` followed by the steps of ``d`` taken from the end of ``c``.

    The start vertex of ``d`` is ignored.
    """
    if c.grid != d.grid:
        raise WalkError("cannot concatenate walks on different grids")
    end = decode(c)[-1]
    _walk_from(c.grid, end, d.steps, base=len(c.steps))
    return Walk(c.grid, c.steps + d.steps, c.start)


def reverse(c: Walk) -> Walk:
    # Pure sequence reversal: signs kept, start kept.  The result need not
    # retrace ``c``; use neg_reverse for that.
    return Walk(c.grid, c.steps[::-1], c.start)


def neg_reverse(c: Walk) -> Walk:
    """Retrace ``c`` backwards from its endpoint: steps reversed and negated."""
    end = decode(c)[-1]
    return Walk(c.grid, tuple(-k for k in reversed(c.steps)), end)


def classify(walk: Walk) -> WalkReport:
    """Structural flags of ``walk``.

    An edge counts as reused when the same pair of vertices is joined again,
    in either direction.
    """
    verts = decode(walk)
    edges = [frozenset((v, w)) for v, w in zip(verts, verts[1:])]
    eulerian = len(set(edges)) == len(edges)
    curve = len(set(verts)) == len(verts)
    return WalkReport(
        is_walk=True,
        is_eulerian=eulerian,
        is_curve=curve,
        is_closed=verts[0] == verts[-1],
        dimension=len({abs(k) for k in walk.steps}),
    )


def net_displacement(walk: Walk) -> Displacement:
    verts = decode(walk)
    a, b = verts[0], verts[-1]
    return Displacement(a.anchor, b.anchor, tuple(y - x for x, y in zip(a.lattice, b.lattice)))


def random_walk(
    grid: GridSpec,
    step_count: int,
    seed: int,
    no_backtrack: bool = False,
    start: Vertex | None = None,
) -> Walk:
    """Seeded random walk, uniform over the steps applicable at each vertex.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``seed``; the
    candidate list is ordered +1, -1, +2, -2, ... so the result is fixed for
    a given seed.  With ``no_backtrack`` the negation of the previous step
    is never chosen.
    """
    if step_count < 0:
        raise WalkError("step_count must be non-negative")
    rng = random.Random(seed)
    v = origin(grid) if start is None else start
    first = v
    steps: list[int] = []
    for i in range(step_count):
        options = applicable_steps(grid, v)
        if no_backtrack and steps:
            options = [k for k in options if k != -steps[-1]]
        if not options:
            raise WalkError(f"dead end at step {i}", i)
        k = rng.choice(options)
        steps.append(k)
        v = step(grid, v, k)
    return Walk(grid, tuple(steps), first)


def index_form(walk: Walk) -> tuple[int, ...]:
    """Flat integer record: start lattice coordinates then the steps.

    Multi-anchor grids need the start anchor too; it is prepended there.
    """
    head = walk.start.lattice
    if len(walk.grid.anchors) > 1:
        head = (walk.start.anchor, *head)
    return (*head, *walk.steps)


def point_form(walk: Walk) -> tuple[float, ...]:
    """Flat real coordinates of every vertex, d numbers per vertex."""
    return tuple(x for v in decode(walk) for x in embed_vertex(walk.grid, v))
