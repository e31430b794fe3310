"""Acceptance criteria, one function each.

Run under pytest (a PASS/FAIL line per criterion is printed at the end of
the session) or directly with ``python tests/test_acceptance.py``.
"""
import subprocess
import sys
from math import factorial
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gridindex.catalog import curve_entry, curve_sequence, curve_walk, half_difference, sierpinski_run_check
from gridindex.cli import cli_main
from gridindex.formats import load_fixture
from gridindex.gray import brgray, code_of, from_delta, is_brgray, is_gray_code, isometry_orbit, to_delta
from gridindex.grid import Vertex, builtin_grid, embed_vertex, is_edge
from gridindex.lsystem import generation, generation_by_squaring
from gridindex.walk import Walk, classify, concat, decode, encode, neg_reverse, net_displacement, random_walk, reverse
from oracle import hamiltonian_paths_from_zero

GOLDEN = Path(__file__).parent / "golden"
BUILTINS = ["orthogonal-2", "orthogonal-3", "square-centered", "triangular", "hexagonal", "square-octagon", "hexagonal-z2"]


def mismatches(derived, printed):
    return [(i + 1, p, d) for i, (d, p) in enumerate(zip(derived, printed)) if d != p]


def c01_brgray_exact():
    printed = [(), (1,), (1, 2, -1), (1, 2, -1, 3, 1, -2, -1)]
    for d, want in enumerate(printed):
        assert brgray(d).steps == want, d
    prefix, _ = load_fixture("brgray")
    assert brgray(4).steps == prefix[:15]
    assert brgray(6).steps[:32] == prefix


def c02_gray_structure():
    for d in range(0, 11):
        code = code_of(brgray(d))
        assert len(code) == 2**d and len(set(code)) == 2**d
        assert is_gray_code(code)
        assert is_brgray(code)


def c03_orbit():
    for d in range(1, 6):
        orbit = isometry_orbit(d)
        assert len(orbit) == factorial(d) * 2**d, d
        assert all(is_brgray(c) for c in orbit)
    oracle = hamiltonian_paths_from_zero(3)
    assert len(oracle) == 18
    reflected = {c for c in oracle if is_brgray(c)}
    from_zero = {c for c in isometry_orbit(3) if c[0] == (0, 0, 0)}
    assert reflected == from_zero


def c04_nonreflected():
    w = Walk(builtin_grid("orthogonal-3"), (1, 2, 3, -2, -1, 2, -3))
    r = classify(w)
    assert r.is_curve is True
    assert is_brgray(code_of(w)) is False
    assert r.dimension == 3


def c05_exclusion():
    g = builtin_grid("square-centered")
    c1, c2 = Vertex(1, (0, 0)), Vertex(1, (0, 1))
    k1, k2 = Vertex(0, (0, 0)), Vertex(0, (0, 1))
    for a, b in ((c1, c2), (k1, k2)):
        diff = [y - x for x, y in zip(embed_vertex(g, a), embed_vertex(g, b))]
        assert diff == [2.0, 0.0]
    assert (is_edge(g, c1, c2) is not None) is False
    assert (is_edge(g, k1, k2) is not None) is True


def c06_flowsnake():
    e = curve_entry("gosper-flowsnake")
    for n in (2, 3, 4):
        assert mismatches(curve_sequence("gosper-flowsnake", n), e.fixture) == [(23, -1, 1)], n
    assert classify(curve_walk("gosper-flowsnake", 3)).is_curve, "generation 3 is not a curve"


def c07_island():
    e = curve_entry("gosper-island")
    for n in range(1, 5):
        assert net_displacement(curve_walk("gosper-island", n)).is_zero, n
    bad = [n for n in (3, 4, 5) if curve_sequence("gosper-island", n)[:31] != e.fixture]
    assert not bad, f"generations {bad} do not match the printed prefix"


def c08_levy():
    e = curve_entry("levy-c")
    assert len(e.fixture) == 37
    bad = [n for n in (5, 6, 7) if curve_sequence("levy-c", n)[:37] != e.fixture]
    assert not bad, f"generations {bad} do not match the printed prefix"


def c09_takagi():
    e = curve_entry("takagi")
    g6 = curve_sequence("takagi", 6)
    assert g6[:55] == e.fixture
    printed_hd, _ = load_fixture("takagi-half-difference")
    hd = half_difference(g6)
    assert hd[:15] == printed_hd[:15]
    assert hd[15] != printed_hd[15] and hd[31] != printed_hd[31]


def c10_sierpinski():
    for n in range(1, 7):
        seq = curve_sequence("sierpinski-triangle", n)
        assert sierpinski_run_check(seq, n), n
        assert len(seq) == 3 * 3 ** (n - 1)
        assert net_displacement(curve_walk("sierpinski-triangle", n)).is_zero


def c11_rabbit():
    e = curve_entry("rabbit")
    want = [(0,), (1,), (1, 0), (1, 0, 1), (1, 0, 1, 1, 0), (1, 0, 1, 1, 0, 1, 0, 1)]
    assert [curve_sequence("rabbit", n) for n in range(6)] == want
    assert want[5] == e.fixture
    for n in range(2, 13):
        assert curve_sequence("rabbit", n) == curve_sequence("rabbit", n - 1) + curve_sequence("rabbit", n - 2)


def c12_squaring():
    from gridindex.catalog import curve_names

    systems = [curve_entry(n).lsystem for n in curve_names()]
    systems = [ls for ls in systems if ls is not None and ls.alphabet is not None]
    systems.append(curve_entry("brgray").lsystem)
    assert len(systems) >= 7
    for ls in systems:
        for m in range(4):
            assert generation_by_squaring(ls, m).symbols == generation(ls, 2**m).symbols


def c13_codec():
    for name in BUILTINS:
        g = builtin_grid(name)
        for seed in range(1000):
            w = random_walk(g, 1 + seed % 24, seed=seed)
            assert encode(g, decode(w)) == w
            assert reverse(reverse(w)) == w
            assert neg_reverse(neg_reverse(w)) == w
            assert decode(neg_reverse(w)) == decode(w)[::-1]
            if seed % 10 == 0:
                d = random_walk(g, 7, seed=seed + 1, start=decode(w)[-1])
                assert reverse(concat(w, d)).steps == reverse(d).steps + reverse(w).steps
    for d in range(0, 9):
        assert from_delta(d, to_delta(brgray(d))) == brgray(d)


def _cli_bytes(argv):
    proc = subprocess.run([sys.executable, "-m", "gridindex.cli", *argv], capture_output=True, check=True)
    return proc.stdout


def c14_goldens():
    cases = [
        (["curve", "gen", "brgray", "-n", "3", "--format", "indices"], "brgray3.txt"),
        (["curve", "gen", "levy-c", "-n", "2", "--format", "svg"], "levy2.svg"),
        (["curve", "gen", "rabbit", "-n", "4", "--format", "bfile"], "rabbit4.b"),
    ]
    for argv, name in cases:
        first, second = _cli_bytes(argv), _cli_bytes(argv)
        assert first == second == (GOLDEN / name).read_bytes(), name


CRITERIA = [
    (1, "brGray exactness", c01_brgray_exact),
    (2, "Gray structure for d <= 10", c02_gray_structure),
    (3, "isometry orbit size and brute-force subset", c03_orbit),
    (4, "non-reflected code classification", c04_nonreflected),
    (5, "square-centered exclusion", c05_exclusion),
    (6, "Gosper flowsnake prefix and curve", c06_flowsnake),
    (7, "Gosper island prefix and closure", c07_island),
    (8, "Levy C prefix", c08_levy),
    (9, "Takagi generation and half-differences", c09_takagi),
    (10, "Sierpinski runs, closure and length", c10_sierpinski),
    (11, "rabbit generations and recurrence", c11_rabbit),
    (12, "squaring equals iteration", c12_squaring),
    (13, "codec and reversal algebra", c13_codec),
    (14, "determinism goldens", c14_goldens),
]

RESULTS: dict[int, tuple[str, str, str]] = {}


def _run(num, title, fn):
    try:
        fn()
    except AssertionError as exc:
        RESULTS[num] = (title, "FAIL", str(exc).splitlines()[0] if str(exc) else "")
        raise
    RESULTS[num] = (title, "PASS", "")


@pytest.mark.parametrize("num, title, fn", CRITERIA, ids=[f"criterion{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn):
    _run(num, title, fn)


def report_lines():
    lines = []
    for n in sorted(RESULTS):
        title, status, detail = RESULTS[n]
        lines.append(f"criterion {n:2d} {status} {title}" + (f": {detail}" if detail else ""))
    return lines


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        try:
            _run(num, title, fn)
        except AssertionError:
            failed += 1
    print("\n".join(report_lines()))
    sys.exit(1 if failed else 0)
