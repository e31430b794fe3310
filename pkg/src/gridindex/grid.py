"""Graph grids with exact vertex coordinates.

A grid is given by a basis (used only for embedding into R^d), a set of
anchors inside the unit cell (stored as exact rationals in basis
coordinates) and an ordered list of edge generators.  A vertex is an
anchor index plus an integer lattice vector, so every adjacency question
is answered with integer arithmetic.

An edge generator is a real edge vector together with the anchor classes
it may start from.  Each placement is an :class:`EdgeTemplate`
``(from_anchor, to_anchor, offset)``: the generator joins anchor
``from_anchor`` at lattice point ``n`` to anchor ``to_anchor`` at lattice
point ``n + offset``.  Knowing the difference vector alone is not enough:
on the square-centered grid the vector (2, 0) joins two corners but never
two centers.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import GridError

__all__ = [
    "EdgeTemplate",
    "EdgeGenerator",
    "Vertex",
    "GridSpec",
    "make_grid",
    "builtin_grid",
    "builtin_grid_names",
    "origin",
    "embed_vertex",
    "is_edge",
    "step",
    "applicable_steps",
    "neighbors",
    "generator_vector",
    "generator_basis_vector",
    "project_grid",
]


@dataclass(frozen=True)
class EdgeTemplate:
    from_anchor: int
    to_anchor: int
    offset: tuple[int, ...]

    def reversed(self) -> EdgeTemplate:
        return EdgeTemplate(self.to_anchor, self.from_anchor, tuple(-x for x in self.offset))


@dataclass(frozen=True)
class EdgeGenerator:
    """One indexed edge direction; usually a single template.

    All templates of a generator carry the same real edge vector.  Several
    templates are needed when the same vector joins different anchor
    classes (corner to center and center to corner, for instance).
    """

    templates: tuple[EdgeTemplate, ...]

    @classmethod
    def single(cls, from_anchor: int, to_anchor: int, offset: Sequence[int]) -> EdgeGenerator:
        return cls((EdgeTemplate(from_anchor, to_anchor, tuple(offset)),))

    def forward_from(self, anchor: int) -> EdgeTemplate | None:
        for t in self.templates:
            if t.from_anchor == anchor:
                return t
        return None

    def backward_from(self, anchor: int) -> EdgeTemplate | None:
        for t in self.templates:
            if t.to_anchor == anchor:
                return t
        return None


@dataclass(frozen=True)
class Vertex:
    anchor: int
    lattice: tuple[int, ...]

    def translate(self, offset: Sequence[int]) -> Vertex:
        return Vertex(self.anchor, tuple(a + b for a, b in zip(self.lattice, offset)))


@dataclass(frozen=True)
class GridSpec:
    dimension: int
    basis: tuple[tuple[float, ...], ...]
    anchors: tuple[tuple[Fraction, ...], ...]
    generators: tuple[EdgeGenerator, ...]
    name: str = field(default="", compare=False)

    @property
    def generator_count(self) -> int:
        return len(self.generators)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GridError(f"bad rational {x!r}") from exc
    if isinstance(x, float):
        # only exact binary floats make sense here; 1/3 must come in as a string
        return Fraction(x)
    raise GridError(f"bad rational {x!r}")


def _as_template(item, d: int) -> EdgeTemplate:
    if isinstance(item, EdgeTemplate):
        t = item
    elif isinstance(item, dict):
        t = EdgeTemplate(int(item["from"]), int(item["to"]), tuple(int(x) for x in item["offset"]))
    else:
        a, b, off = item
        t = EdgeTemplate(int(a), int(b), tuple(int(x) for x in off))
    if len(t.offset) != d:
        raise GridError(f"generator offset {t.offset} has wrong length (dimension {d})")
    return t


def _as_generator(item, d: int) -> EdgeGenerator:
    if isinstance(item, EdgeGenerator):
        return EdgeGenerator(tuple(_as_template(t, d) for t in item.templates))
    if isinstance(item, (EdgeTemplate, dict)):
        return EdgeGenerator((_as_template(item, d),))
    items = list(item)
    # a bare (from, to, offset) triple vs. a list of templates
    if len(items) == 3 and isinstance(items[0], int) and not isinstance(items[0], bool):
        return EdgeGenerator((_as_template(items, d),))
    if not items:
        raise GridError("generator without templates")
    return EdgeGenerator(tuple(_as_template(t, d) for t in items))


def _basis_vector(anchors, t: EdgeTemplate) -> tuple[Fraction, ...]:
    a, b = anchors[t.from_anchor], anchors[t.to_anchor]
    return tuple(b[i] - a[i] + t.offset[i] for i in range(len(t.offset)))


def make_grid(dimension: int, basis, anchors, generators, name: str = "") -> GridSpec:
    """Validate the pieces and build a :class:`GridSpec`.

    ``anchors`` are given in basis coordinates (rationals in [0, 1), strings
    like ``"1/3"`` accepted).  Each generator is an :class:`EdgeGenerator`,
    an ``(from, to, offset)`` triple, a ``{"from", "to", "offset"}`` dict,
    or a list of those sharing one edge vector.
    """
    d = int(dimension)
    if d < 0:
        raise GridError("dimension must be non-negative")

    basis_t = tuple(tuple(float(x) for x in b) for b in basis)
    if len(basis_t) != d or any(len(b) != d for b in basis_t):
        raise GridError(f"basis must be {d} vectors of length {d}")
    if d and np.linalg.matrix_rank(np.array(basis_t)) < d:
        raise GridError("basis vectors are linearly dependent")

    anchors_t = tuple(tuple(_as_fraction(x) for x in a) for a in anchors)
    if not anchors_t:
        raise GridError("a grid needs at least one anchor")
    for a in anchors_t:
        if len(a) != d:
            raise GridError(f"anchor {a} has wrong length (dimension {d})")
        if any(not (0 <= x < 1) for x in a):
            raise GridError(f"anchor {tuple(str(x) for x in a)} lies outside the unit cell [0,1)^{d}")
    if len(set(anchors_t)) != len(anchors_t):
        raise GridError("duplicate anchor")

    gens = tuple(_as_generator(g, d) for g in generators)
    seen: dict[EdgeTemplate, int] = {}
    for k, g in enumerate(gens, start=1):
        vec = None
        froms, tos = set(), set()
        for t in g.templates:
            for idx in (t.from_anchor, t.to_anchor):
                if not 0 <= idx < len(anchors_t):
                    raise GridError(f"generator {k} refers to unknown anchor {idx}")
            if t.from_anchor == t.to_anchor and not any(t.offset):
                raise GridError(f"generator {k} is the zero edge")
            v = _basis_vector(anchors_t, t)
            if vec is None:
                vec = v
            elif v != vec:
                raise GridError(f"templates of generator {k} carry different edge vectors")
            if t.from_anchor in froms or t.to_anchor in tos:
                raise GridError(f"generator {k} has two templates leaving or entering one anchor class")
            froms.add(t.from_anchor)
            tos.add(t.to_anchor)
            if t in seen:
                raise GridError(f"generator {k} duplicates generator {seen[t]}")
            if t.reversed() in seen:
                raise GridError(f"generator {k} is the negation of generator {seen[t.reversed()]}")
            seen[t] = k
    return GridSpec(d, basis_t, anchors_t, gens, name)


_SQRT3 = math.sqrt(3.0)
_THIRD, _TWO_THIRDS = Fraction(1, 3), Fraction(2, 3)
_HALF = Fraction(1, 2)


def _orthogonal(d: int) -> GridSpec:
    eye = [[1.0 if i == j else 0.0 for j in range(d)] for i in range(d)]
    gens = [(0, 0, [1 if i == j else 0 for j in range(d)]) for i in range(d)]
    return make_grid(d, eye, [[0] * d], gens, name=f"orthogonal-{d}")


# Anchored encodings, derived once from the printed vector sets.  Anchors are
# in basis coordinates; every generator's real vector is checked in tests.
def _square_centered() -> GridSpec:
    # corners anchor 0, centers anchor 1 at real (1, 1)
    return make_grid(
        2,
        [(0, 2), (2, 0)],
        [(0, 0), (_HALF, _HALF)],
        [
            (0, 0, (1, 0)),                      # (0, 2), corners only
            (0, 0, (0, 1)),                      # (2, 0), corners only
            [(0, 1, (0, 0)), (1, 0, (1, 1))],    # (1, 1)
            [(0, 1, (0, -1)), (1, 0, (1, 0))],   # (-1, 1)
        ],
        name="square-centered",
    )


def _triangular() -> GridSpec:
    return make_grid(
        2,
        [(1, 0), (0.5, _SQRT3 / 2)],
        [(0, 0)],
        [(0, 0, (1, 0)), (0, 0, (0, 1)), (0, 0, (-1, 1))],
        name="triangular",
    )


def _hexagonal() -> GridSpec:
    # anchors (1/2, sqrt3/6) and (1, sqrt3/3) in real coordinates
    return make_grid(
        2,
        [(1, 0), (0.5, _SQRT3 / 2)],
        [(_THIRD, _THIRD), (_TWO_THIRDS, _TWO_THIRDS)],
        [
            (1, 0, (0, 1)),    # (0, sqrt3/3)
            (0, 1, (-1, 0)),   # (-1/2, sqrt3/6)
            (0, 1, (0, 0)),    # (1/2, sqrt3/6)
        ],
        name="hexagonal",
    )


def _square_octagon() -> GridSpec:
    # real anchors (1, 1/3), (5/3, 1), (1, 5/3), (1/3, 1); basis swaps axes
    return make_grid(
        2,
        [(0, 2), (2, 0)],
        [
            (Fraction(1, 6), _HALF),
            (_HALF, Fraction(5, 6)),
            (Fraction(5, 6), _HALF),
            (_HALF, Fraction(1, 6)),
        ],
        [
            (2, 0, (1, 0)),                        # (0, 2/3)
            (1, 3, (0, 1)),                        # (2/3, 0)
            [(0, 1, (0, 0)), (3, 2, (0, 0))],      # (2/3, 2/3)
            [(0, 3, (0, 0)), (1, 2, (0, 0))],      # (-2/3, 2/3)
        ],
        name="square-octagon",
    )


def _hexagonal_z2() -> GridSpec:
    return make_grid(
        2,
        [(1, 0), (0, 1)],
        [(_THIRD, _THIRD), (_TWO_THIRDS, _TWO_THIRDS)],
        [
            (0, 1, (0, 0)),    # (1/3, 1/3)
            (0, 1, (0, -1)),   # (1/3, -2/3)
            (0, 1, (-1, 0)),   # (-2/3, 1/3)
        ],
        name="hexagonal-z2",
    )


_BUILTINS = {
    "square-centered": _square_centered,
    "triangular": _triangular,
    "hexagonal": _hexagonal,
    "square-octagon": _square_octagon,
    "hexagonal-z2": _hexagonal_z2,
}


def builtin_grid_names() -> list[str]:
    return ["orthogonal-<d>", *_BUILTINS]


def builtin_grid(name: str) -> GridSpec:
    """Return one of the named grids; ``orthogonal-<d>`` takes any d >= 0."""
    m = re.fullmatch(r"orthogonal-(\d+)", name)
    if m:
        return _orthogonal(int(m.group(1)))
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise GridError(f"unknown grid {name!r}") from None


def origin(grid: GridSpec, anchor: int = 0) -> Vertex:
    return Vertex(anchor, (0,) * grid.dimension)


def _check_vertex(grid: GridSpec, v: Vertex) -> None:
    if not 0 <= v.anchor < len(grid.anchors):
        raise GridError(f"anchor index {v.anchor} not in grid (has {len(grid.anchors)})")
    if len(v.lattice) != grid.dimension:
        raise GridError(f"vertex {v} has wrong dimension")


def embed_vertex(grid: GridSpec, vertex: Vertex) -> tuple[float, ...]:
    """Real coordinates of ``vertex``: B * (lattice + anchor)."""
    _check_vertex(grid, vertex)
    beta = grid.anchors[vertex.anchor]
    coeffs = [float(n + b) for n, b in zip(vertex.lattice, beta)]
    return tuple(
        sum(c * bvec[j] for c, bvec in zip(coeffs, grid.basis)) for j in range(grid.dimension)
    )


def _check_index(grid: GridSpec, k: int) -> None:
    if k == 0 or abs(k) > len(grid.generators):
        raise GridError(f"step {k} outside +-1..{len(grid.generators)}")


def generator_basis_vector(grid: GridSpec, k: int) -> tuple[Fraction, ...]:
    """Exact edge vector of signed generator ``k`` in basis coordinates."""
    _check_index(grid, k)
    v = _basis_vector(grid.anchors, grid.generators[abs(k) - 1].templates[0])
    return v if k > 0 else tuple(-x for x in v)


def generator_vector(grid: GridSpec, k: int) -> tuple[float, ...]:
    """Real edge vector of signed generator ``k``."""
    coeffs = [float(c) for c in generator_basis_vector(grid, k)]
    return tuple(
        sum(c * bvec[j] for c, bvec in zip(coeffs, grid.basis)) for j in range(grid.dimension)
    )


def step(grid: GridSpec, v: Vertex, k: int) -> Vertex | None:
    """Follow signed generator ``k`` from ``v``; None if it does not apply there."""
    _check_index(grid, k)
    gen = grid.generators[abs(k) - 1]
    if k > 0:
        t = gen.forward_from(v.anchor)
        if t is None:
            return None
        return Vertex(t.to_anchor, tuple(a + b for a, b in zip(v.lattice, t.offset)))
    t = gen.backward_from(v.anchor)
    if t is None:
        return None
    return Vertex(t.from_anchor, tuple(a - b for a, b in zip(v.lattice, t.offset)))


def applicable_steps(grid: GridSpec, v: Vertex) -> list[int]:
    """Signed indices usable at ``v``, in the order +1, -1, +2, -2, ..."""
    out = []
    for k, gen in enumerate(grid.generators, start=1):
        if gen.forward_from(v.anchor) is not None:
            out.append(k)
        if gen.backward_from(v.anchor) is not None:
            out.append(-k)
    return out


def is_edge(grid: GridSpec, v: Vertex, w: Vertex) -> int | None:
    """Signed generator index carrying ``v`` to ``w``, or None."""
    _check_vertex(grid, v)
    _check_vertex(grid, w)
    diff = tuple(b - a for a, b in zip(v.lattice, w.lattice))
    neg = tuple(-x for x in diff)
    for k, gen in enumerate(grid.generators, start=1):
        for t in gen.templates:
            if t.from_anchor == v.anchor and t.to_anchor == w.anchor and t.offset == diff:
                return k
            if t.from_anchor == w.anchor and t.to_anchor == v.anchor and t.offset == neg:
                return -k
    return None


def neighbors(grid: GridSpec, v: Vertex) -> list[tuple[int, Vertex]]:
    _check_vertex(grid, v)
    return [(k, step(grid, v, k)) for k in applicable_steps(grid, v)]


def project_grid(grid: GridSpec, linear_map: Iterable[Sequence[float]]) -> GridSpec:
    """Apply a linear map to the basis; anchors and generators keep their
    basis coordinates, so only the embedding changes."""
    m = np.array([[float(x) for x in row] for row in linear_map], dtype=float)
    d = grid.dimension
    if m.ndim != 2 or m.shape[1] != d:
        raise GridError(f"linear map must take R^{d}")
    new_basis = [tuple(float(x) for x in m @ np.array(b)) for b in grid.basis]
    if m.shape[0] != d or (d and np.linalg.matrix_rank(np.array(new_basis)) < d):
        raise GridError("projected basis is linearly dependent")
    return GridSpec(d, tuple(new_basis), grid.anchors, grid.generators, grid.name)
