"""Named curves and sequences.

Each entry binds an L-system (or a fixed index string) to the grid it is
drawn on, together with the sequence prefix as it was printed.  Where the
printed prefix disagrees with what the rules produce, the entry keeps the
printed values and says where they differ.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import CatalogError, DomainError
from .formats import load_fixture
from .grid import GridSpec, builtin_grid, make_grid
from .gray import BRGRAY_SYSTEM
from .lsystem import LSystem, generation, make_lsystem
from .walk import Walk

__all__ = [
    "CurveEntry",
    "curve_names",
    "curve_entry",
    "curve_sequence",
    "curve_walk",
    "half_difference",
    "sierpinski_run_check",
]


@dataclass(frozen=True)
class CurveEntry:
    name: str
    lsystem: LSystem | None
    grid_name: str | None
    grid: GridSpec | None
    recommended_generation: int
    fixture: tuple[int, ...] = ()
    fixture_source: str = ""
    notes: tuple[str, ...] = ()
    static: tuple[int, ...] | None = None
    # brgray is indexed by cube dimension: sequence n is generation n - 1
    generation_offset: int = 0
    # (1-based position, printed value, value the rules give)
    known_mismatches: tuple[tuple[int, int, int], ...] = field(default=())

    @property
    def start(self) -> tuple[int, ...]:
        return self.lsystem.start if self.lsystem is not None else ()


def _sierpinski_grid() -> GridSpec:
    # triangular lattice with edges numbered (1,0), (-1/2, h), (-1/2, -h)
    tri = builtin_grid("triangular")
    return make_grid(
        2,
        tri.basis,
        tri.anchors,
        [(0, 0, (1, 0)), (0, 0, (-1, 1)), (0, 0, (0, -1))],
        name="triangular-sierpinski",
    )


def _build() -> dict[str, CurveEntry]:
    entries: list[CurveEntry] = []

    seq, src = load_fixture("brgray")
    entries.append(
        CurveEntry(
            "brgray",
            BRGRAY_SYSTEM,
            "orthogonal-<d>",
            None,
            recommended_generation=6,
            fixture=seq,
            fixture_source=src,
            notes=("sequence n is the reflected code of dimension n (rule generation n - 1)",),
            generation_offset=1,
        )
    )

    seq, src = load_fixture("gray-nonreflected-3")
    entries.append(
        CurveEntry(
            "gray-nonreflected-3",
            None,
            "orthogonal-3",
            builtin_grid("orthogonal-3"),
            recommended_generation=0,
            fixture=seq,
            fixture_source=src,
            notes=("fixed index string, no production rules",),
            static=seq,
        )
    )

    entries.append(
        CurveEntry(
            "sierpinski-triangle",
            make_lsystem({0, 1, 2, 3}, {0: (1, 2, 3), 1: (1, 1), 2: (2, 3, 2, 1, 2), 3: (3, 3)}, start=0),
            "triangular-sierpinski",
            _sierpinski_grid(),
            recommended_generation=4,
            notes=(
                "edge vectors (1,0), (-1/2, sqrt3/2), (-1/2, -sqrt3/2); the printed vectors omit "
                "the factor 1/2 on sqrt3",
            ),
        )
    )

    seq, src = load_fixture("gosper-flowsnake")
    entries.append(
        CurveEntry(
            "gosper-flowsnake",
            make_lsystem(
                None,
                {1: (1, 2, -1, 3, 1, 1, -3), 2: (1, 2, 2, -1, -2, 3, 2), 3: (3, 1, -3, -2, 3, 3, 2)},
                "mirror",
                start=1,
            ),
            "triangular",
            builtin_grid("triangular"),
            recommended_generation=3,
            fixture=seq,
            fixture_source=src,
            notes=("term 23 is printed as -1; the rules give +1 (third symbol of P(3))",),
            known_mismatches=((23, -1, 1),),
        )
    )

    seq, src = load_fixture("gosper-island")
    entries.append(
        CurveEntry(
            "gosper-island",
            make_lsystem(
                None,
                {
                    0: (1, 2, 3, -1, -2, -3),
                    1: (1, -3, 1),
                    2: (2, 1, 2),
                    3: (3, 2, 3),
                    -3: (-3, -2, -3),
                    -2: (-2, -1, -2),
                    -1: (-1, 3, -1),
                },
                "explicit",
                start=0,
            ),
            "triangular",
            builtin_grid("triangular"),
            recommended_generation=4,
            fixture=seq,
            fixture_source=src,
            notes=(
                "P(-1) is printed as (-1, -3, -1); the table uses -P(1) = (-1, 3, -1), the only "
                "choice that keeps every generation closed (the printed prefix does not use P(-1))",
                "the printed 31 terms are the start of generation 4 from 0; start 0 is not "
                "self-similar, so generations 3 and 5 begin differently",
            ),
        )
    )

    seq, src = load_fixture("levy-c")
    entries.append(
        CurveEntry(
            "levy-c",
            make_lsystem(None, {1: (1, 2), 2: (2, -1)}, "negate", start=1),
            "orthogonal-2",
            builtin_grid("orthogonal-2"),
            recommended_generation=6,
            fixture=seq,
            fixture_source=src,
            notes=(
                "terms 1-28 and 37 agree with the rules; printed terms 29-36 do not (the printed "
                "block 29-32 is P^2(-1) where the rules require P^2(-2))",
            ),
            known_mismatches=(
                (29, -1, -2),
                (30, -2, 1),
                (31, -2, 1),
                (32, 1, 2),
                (33, 1, 2),
                (34, 2, -1),
                (35, 2, -1),
                (36, -1, -2),
            ),
        )
    )

    seq, src = load_fixture("takagi")
    entries.append(
        CurveEntry(
            "takagi",
            make_lsystem("integers", "takagi", start=0),
            None,
            None,
            recommended_generation=6,
            fixture=seq,
            fixture_source=src,
            notes=(
                "printed half-differences disagree with the printed generation at positions 16 "
                "(-4 printed, -3 derived) and 32 (-3 printed, -4 derived)",
            ),
        )
    )

    seq, src = load_fixture("rabbit")
    entries.append(
        CurveEntry(
            "rabbit",
            make_lsystem({0, 1}, {0: (1,), 1: (1, 0)}, start=0),
            None,
            None,
            recommended_generation=5,
            fixture=seq,
            fixture_source=src,
        )
    )

    entries.append(
        CurveEntry(
            "thue-morse",
            make_lsystem({0, 1}, {0: (0, 1), 1: (1, 0)}, start=0),
            None,
            None,
            recommended_generation=5,
        )
    )
    return {e.name: e for e in entries}


_CATALOG = _build()


def curve_names() -> list[str]:
    return list(_CATALOG)


def curve_entry(name: str) -> CurveEntry:
    try:
        return _CATALOG[name]
    except KeyError:
        raise CatalogError(f"unknown curve {name!r}; known: {', '.join(_CATALOG)}") from None


def curve_sequence(name: str, n: int) -> tuple[int, ...]:
    """Generation ``n`` of a catalog entry as a plain integer tuple."""
    entry = curve_entry(name)
    if n < 0:
        raise CatalogError("generation must be non-negative")
    if entry.static is not None:
        return entry.static
    g = n - entry.generation_offset
    if g < 0:
        return ()
    return generation(entry.lsystem, g).symbols


def curve_walk(name: str, n: int) -> Walk:
    """Generation ``n`` as a walk from the origin of the entry's grid."""
    entry = curve_entry(name)
    seq = curve_sequence(name, n)
    if entry.grid is not None:
        grid = entry.grid
    elif entry.grid_name == "orthogonal-<d>":
        grid = builtin_grid(f"orthogonal-{n}")
    else:
        raise CatalogError(f"{name} is a plain integer sequence, not a walk")
    return Walk(grid, seq)


def half_difference(seq: Sequence[int]) -> tuple[int, ...]:
    """(s[i] - s[i+1]) / 2 for consecutive terms."""
    out = []
    for i, (a, b) in enumerate(zip(seq, seq[1:])):
        if (a - b) % 2:
            raise DomainError(f"odd difference between terms {i} and {i + 1}")
        out.append((a - b) // 2)
    return tuple(out)


def _run(seq: Sequence[int], symbol: int) -> int:
    n = 0
    for x in seq:
        if x != symbol:
            break
        n += 1
    return n


def sierpinski_run_check(seq: Sequence[int], n: int) -> bool:
    """Generation ``n`` of the Sierpinski system opens with exactly 2^(n-1)
    ones and closes with exactly 2^(n-1) threes."""
    if n < 1:
        return False
    want = 1 << (n - 1)
    return _run(seq, 1) == want and _run(reversed(seq), 3) == want
