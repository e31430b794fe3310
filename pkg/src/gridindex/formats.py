"""Readers and writers for the plain-text and JSON file formats."""
from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DomainError, FormatError
from .grid import GridSpec, builtin_grid, embed_vertex, make_grid
from .lsystem import LSystem, make_lsystem
from .walk import Walk, decode

__all__ = [
    "parse_indices",
    "format_indices",
    "emit_bfile",
    "parse_bfile",
    "format_code",
    "parse_code",
    "format_points",
    "parse_points",
    "grid_to_config",
    "grid_from_config",
    "lsystem_to_config",
    "lsystem_from_config",
    "load_grid",
    "load_lsystem",
    "load_fixture",
]

_BRACKETS = str.maketrans({"⟨": " ", "⟩": " ", "<": " ", ">": " ", "−": "-"})


def _content_lines(text: str) -> list[str]:
    return [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_indices(text: str) -> tuple[int, ...]:
    """Signed integers separated by commas and/or whitespace.

    Lines starting with ``#`` are comments; angle brackets and the Unicode
    minus sign are accepted.
    """
    body = " ".join(_content_lines(text)).translate(_BRACKETS)
    tokens = [t for t in re.split(r"[,\s]+", body) if t]
    try:
        return tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise FormatError(f"not an index sequence: {exc}") from None


def format_indices(seq: Iterable[int]) -> str:
    return ", ".join(str(int(x)) for x in seq)


def emit_bfile(seq: Iterable[int], offset: int = 1) -> str:
    """OEIS b-file text: one ``n a(n)`` line per term."""
    return "".join(f"{n} {int(a)}\n" for n, a in enumerate(seq, start=offset))


def parse_bfile(text: str) -> tuple[int, tuple[int, ...]]:
    """Return ``(offset, terms)``; indices must be consecutive."""
    pairs = []
    for ln in _content_lines(text):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad b-file line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"bad b-file line {ln!r}") from None
    if not pairs:
        return 1, ()
    first = pairs[0][0]
    if [n for n, _ in pairs] != list(range(first, first + len(pairs))):
        raise FormatError("b-file indices are not consecutive")
    return first, tuple(a for _, a in pairs)


def format_code(code: Iterable[Sequence[int]]) -> str:
    return "".join("".join(str(b) for b in v) + "\n" for v in code)


def parse_code(text: str) -> tuple[tuple[int, ...], ...]:
    code = []
    for ln in _content_lines(text):
        s = ln.strip()
        if not re.fullmatch(r"[01]*", s):
            raise FormatError(f"not a bit string: {s!r}")
        code.append(tuple(int(c) for c in s))
    return tuple(code)


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def format_points(walk: Walk) -> str:
    """Embedded coordinates, one vertex per line, 6 decimals."""
    return "".join(
        ", ".join(_fmt(x) for x in embed_vertex(walk.grid, v)) + "\n" for v in decode(walk)
    )


def parse_points(text: str) -> list[tuple[float, ...]]:
    try:
        return [tuple(float(t) for t in ln.split(",")) for ln in _content_lines(text)]
    except ValueError as exc:
        raise FormatError(f"bad point line: {exc}") from None


def grid_to_config(grid: GridSpec) -> dict:
    gens = []
    for g in grid.generators:
        objs = [{"from": t.from_anchor, "to": t.to_anchor, "offset": list(t.offset)} for t in g.templates]
        gens.append(objs[0] if len(objs) == 1 else objs)
    return {
        "dimension": grid.dimension,
        "basis": [list(b) for b in grid.basis],
        "anchors": [[str(x) for x in a] for a in grid.anchors],
        "generators": gens,
    }


def grid_from_config(cfg: dict, name: str = "") -> GridSpec:
    try:
        return make_grid(
            cfg["dimension"],
            cfg["basis"],
            cfg["anchors"],
            cfg["generators"],
            name=name or cfg.get("name", ""),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed grid config: {exc!r}") from None


def lsystem_to_config(ls: LSystem) -> dict:
    if ls.formula is not None:
        return {
            "alphabet": "integers",
            "formula": ls.formula,
            "closure": ls.closure,
            "start": list(ls.start),
        }
    return {
        "alphabet": "finite",
        "symbols": sorted(ls.alphabet),
        "rules": {str(k): list(v) for k, v in sorted(ls.table.items())},
        "closure": ls.closure,
        "start": list(ls.start),
    }


def lsystem_from_config(cfg: dict) -> LSystem:
    try:
        if "formula" in cfg:
            if "rules" in cfg:
                raise FormatError("'formula' and 'rules' are mutually exclusive")
            return make_lsystem("integers", cfg["formula"], cfg.get("closure"), cfg["start"])
        alphabet = cfg.get("alphabet", "finite")
        if alphabet not in ("finite", "integers"):
            raise FormatError(f"unknown alphabet kind {alphabet!r}")
        symbols = cfg.get("symbols") if alphabet == "finite" else "integers"
        rules = {int(k): v for k, v in cfg["rules"].items()}
        return make_lsystem(symbols, rules, cfg.get("closure", "explicit"), cfg["start"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (FormatError, DomainError)):
            raise
        raise FormatError(f"malformed L-system config: {exc!r}") from None


def _read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg})") from None


def load_grid(name_or_path: str) -> GridSpec:
    """Builtin grid name, or a path ending in ``.json``."""
    if str(name_or_path).endswith(".json"):
        return grid_from_config(_read_json(name_or_path), name=Path(name_or_path).stem)
    return builtin_grid(name_or_path)


def load_lsystem(path) -> LSystem:
    return lsystem_from_config(_read_json(path))


def load_fixture(name: str) -> tuple[tuple[int, ...], str]:
    """Packaged fixture sequence and its ``# source:`` note."""
    try:
        text = resources.files("gridindex").joinpath("fixtures").joinpath(f"{name}.txt").read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FormatError(f"no fixture named {name!r}") from None
    source = ""
    for ln in text.splitlines():
        if ln.startswith("# source:"):
            source = ln[len("# source:") :].strip()
            break
    return parse_indices(text), source
