"""Binary Gray codes as walks on the orthogonal grid.

A code is a tuple of bit tuples.  The reflected code in dimension d is
generation d-1 of the ``brgray`` formula system started at 1.
"""
from __future__ import annotations

from itertools import permutations, product
from typing import Iterable, Sequence

from .errors import DomainError
from .grid import builtin_grid
from .lsystem import generation, make_lsystem
from .walk import Walk, decode

__all__ = [
    "BRGRAY_SYSTEM",
    "brgray",
    "code_of",
    "is_gray_code",
    "is_brgray",
    "isometry_orbit",
    "enumerate_gray_codes",
    "to_delta",
    "from_delta",
]

Code = tuple[tuple[int, ...], ...]

BRGRAY_SYSTEM = make_lsystem("integers", "brgray", start=1)

MAX_ORBIT_DIMENSION = 6
MAX_ENUMERATION_DIMENSION = 3


def brgray(d: int) -> Walk:
    """Normalized reflected Gray code of dimension ``d`` in index form."""
    if d < 0:
        raise DomainError("dimension must be non-negative")
    grid = builtin_grid(f"orthogonal-{d}")
    if d == 0:
        return Walk(grid)
    return Walk(grid, generation(BRGRAY_SYSTEM, d - 1).symbols)


def code_of(walk: Walk) -> Code:
    """Vertices of a walk on an orthogonal grid as bit tuples."""
    verts = decode(walk)
    code = tuple(v.lattice for v in verts)
    if any(x not in (0, 1) for v in code for x in v):
        raise DomainError("walk leaves the unit cube")
    return code


def _hamming(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x != y for x, y in zip(a, b))


def _well_formed(code) -> Code | None:
    code = tuple(tuple(v) for v in code)
    if not code:
        return None
    d = len(code[0])
    if any(len(v) != d or any(x not in (0, 1) for x in v) for v in code):
        return None
    return code


def is_gray_code(code: Iterable[Sequence[int]]) -> bool:
    """Binary vectors of one length, pairwise distinct, successive ones at
    Hamming distance 1."""
    code = _well_formed(code)
    if code is None:
        return False
    if len(set(code)) != len(code):
        return False
    return all(_hamming(a, b) == 1 for a, b in zip(code, code[1:]))


def _flip(v: tuple[int, ...], c: int) -> tuple[int, ...]:
    return v[:c] + (1 - v[c],) + v[c + 1 :]


def _reflected(code: Code, coords: tuple[int, ...]) -> bool:
    if len(code) != 1 << len(coords):
        return False
    if len(code) == 1:
        return True
    half = len(code) // 2
    first, second = code[:half], code[half:]
    for c in coords:
        bit = first[0][c]
        if any(v[c] != bit for v in first):
            continue
        if all(second[i] == _flip(first[half - 1 - i], c) for i in range(half)):
            if _reflected(first, tuple(x for x in coords if x != c)):
                return True
    return False


def is_brgray(code: Iterable[Sequence[int]]) -> bool:
    """Recursive reflection test.

    Some coordinate is constant on the first half, the second half is the
    first half reversed with that coordinate flipped, and the first half is
    itself reflected in the remaining coordinates.  Any coordinate and any
    constant bit qualify, so the test is invariant under cube symmetries.
    """
    code = _well_formed(code)
    if code is None:
        return False
    return _reflected(code, tuple(range(len(code[0]))))


def isometry_orbit(d: int) -> frozenset[Code]:
    """All images of the normalized code under coordinate permutations and
    bit flips."""
    if not 0 <= d <= MAX_ORBIT_DIMENSION:
        raise DomainError(f"orbit dimension must be in 0..{MAX_ORBIT_DIMENSION}")
    base = code_of(brgray(d))
    orbit = set()
    for perm in permutations(range(d)):
        for flips in product((0, 1), repeat=d):
            orbit.add(tuple(tuple(v[perm[i]] ^ flips[i] for i in range(d)) for v in base))
    return frozenset(orbit)


def enumerate_gray_codes(d: int) -> list[Code]:
    """Every Hamiltonian path of the d-cube from the all-zeros vertex, by
    exhaustive backtracking (lexicographic in the flipped coordinate)."""
    if not 0 <= d <= MAX_ENUMERATION_DIMENSION:
        raise DomainError(f"enumeration dimension must be in 0..{MAX_ENUMERATION_DIMENSION}")
    total = 1 << d
    found: list[list[int]] = []
    path = [0]
    used = {0}

    def extend():
        if len(path) == total:
            found.append(path.copy())
            return
        v = path[-1]
        for i in range(d):
            w = v ^ (1 << i)
            if w not in used:
                used.add(w)
                path.append(w)
                extend()
                path.pop()
                used.remove(w)

    extend()
    return [tuple(tuple((v >> i) & 1 for i in range(d)) for v in p) for p in found]


def to_delta(walk) -> tuple[int, ...]:
    """Delta sequence of a binary walk: the changed coordinate, 0-based."""
    steps = walk.steps if isinstance(walk, Walk) else walk
    return tuple(abs(k) - 1 for k in steps)


def from_delta(d: int, deltas: Iterable[int]) -> Walk:
    """Rebuild a binary walk from the origin by toggling coordinates.

    A step is positive when the coordinate is 0 and negative when it is 1.
    """
    bits = [0] * d
    steps = []
    for i, delta in enumerate(deltas):
        if not 0 <= delta < d:
            raise DomainError(f"delta {delta} at position {i} outside 0..{d - 1}")
        steps.append(delta + 1 if bits[delta] == 0 else -(delta + 1))
        bits[delta] ^= 1
    walk = Walk(builtin_grid(f"orthogonal-{d}"), tuple(steps))
    assert all(x in (0, 1) for x in decode(walk)[-1].lattice)
    return walk
