"""Command-line front end.

Exit codes: 0 success, 1 domain or validation error, 2 I/O, parse or usage
error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .errors import DomainError, FormatError
from .formats import (
    emit_bfile,
    format_code,
    format_indices,
    format_points,
    load_grid,
    load_lsystem,
    parse_code,
    parse_indices,
)
from .gray import brgray, code_of, enumerate_gray_codes, is_brgray, is_gray_code, isometry_orbit
from .grid import GridSpec, embed_vertex, generator_vector, origin
from .lsystem import generation, generation_by_squaring
from .render import render_grid_svg, render_svg
from .walk import Walk, classify, random_walk


class _Parser(argparse.ArgumentParser):
    # argparse exits on its own; raise instead so cli_main can return a code
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise FormatError(f"cannot write {out}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


def _f(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _vec(xs) -> str:
    return "(" + ", ".join(_f(x) for x in xs) + ")"


def _describe_grid(grid: GridSpec) -> str:
    lines = [f"name: {grid.name or '(unnamed)'}", f"dimension: {grid.dimension}", "basis:"]
    lines += [f"  b{i + 1} = {_vec(b)}" for i, b in enumerate(grid.basis)]
    lines.append("anchors:")
    for i, a in enumerate(grid.anchors):
        exact = "(" + ", ".join(str(x) for x in a) + ")"
        lines.append(f"  a{i} = {exact}  real {_vec(embed_vertex(grid, origin(grid, i)))}")
    lines.append("generators:")
    for k, g in enumerate(grid.generators, start=1):
        places = "; ".join(f"a{t.from_anchor}->a{t.to_anchor} offset {tuple(t.offset)}" for t in g.templates)
        lines.append(f"  {k}: {_vec(generator_vector(grid, k))}  {places}")
    return "\n".join(lines) + "\n"


def _cmd_curve_list(args) -> int:
    for name in catalog.curve_names():
        e = catalog.curve_entry(name)
        print(f"{name}\tgrid={e.grid_name or '-'}\tgeneration={e.recommended_generation}")
    return 0


def _cmd_curve_gen(args) -> int:
    seq = catalog.curve_sequence(args.name, args.n)
    if args.format == "indices":
        text = format_indices(seq) + "\n"
    elif args.format == "bfile":
        text = emit_bfile(seq, args.offset)
    else:
        walk = catalog.curve_walk(args.name, args.n)
        text = format_points(walk) if args.format == "points" else render_svg(walk.grid, [walk])
    _emit(text, args.output)
    return 0


def _cmd_lsys_run(args) -> int:
    ls = load_lsystem(args.config)
    if args.squared is not None:
        s = generation_by_squaring(ls, args.squared)
    else:
        s = generation(ls, args.n)
    _emit(format_indices(s) + "\n", args.output)
    return 0


def _cmd_grid_show(args) -> int:
    grid = load_grid(args.grid)
    text = render_grid_svg(grid, args.radius) if args.svg else _describe_grid(grid)
    _emit(text, args.output)
    return 0


def _cmd_walk_verify(args) -> int:
    grid = load_grid(args.grid)
    walk = Walk(grid, parse_indices(_read_text(args.file)))
    print("\n".join(classify(walk).lines()))
    return 0


def _cmd_walk_random(args) -> int:
    grid = load_grid(args.grid)
    walk = random_walk(grid, args.steps, args.seed, args.no_backtrack)
    _emit(format_indices(walk.steps) + "\n", args.output)
    return 0


def _cmd_gray(args) -> int:
    d = args.dim
    if args.check:
        text = _read_text(args.check)
        try:
            code = parse_code(text)
        except FormatError:
            code = code_of(Walk(load_grid(f"orthogonal-{d}"), parse_indices(text)))
        print(f"is_gray_code: {str(is_gray_code(code)).lower()}")
        print(f"is_brgray: {str(is_brgray(code)).lower()}")
        return 0
    if args.enumerate:
        codes = enumerate_gray_codes(d)
        reflected = [c for c in codes if is_brgray(c)]
        print(f"gray_codes_from_origin: {len(codes)}")
        print(f"brgray_codes_from_origin: {len(reflected)}")
        print(f"brgray_codes_all_starts: {len(reflected) * 2**d}")
        print(f"orbit_size: {len(isometry_orbit(d))}")
        return 0
    _emit(format_code(code_of(brgray(d))), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gridindex", description="Graph grids, index notation and integer L-systems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    curve = sub.add_parser("curve", help="catalog curves and sequences")
    csub = curve.add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = csub.add_parser("list", help="list catalog entries")
    c.set_defaults(func=_cmd_curve_list)
    c = csub.add_parser("gen", help="generate a catalog sequence")
    c.add_argument("name")
    c.add_argument("-n", type=int, required=True, help="generation (cube dimension for brgray)")
    c.add_argument("--format", choices=("indices", "points", "bfile", "svg"), default="indices")
    c.add_argument("--offset", type=int, default=1, help="first index of a b-file")
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_curve_gen)

    lsys = sub.add_parser("lsys", help="run an L-system config file")
    lsub = lsys.add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = lsub.add_parser("run")
    c.add_argument("config")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("-n", type=int, help="generation")
    g.add_argument("--squared", type=int, metavar="M", help="generation 2^M by rule squaring")
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_lsys_run)

    grid = sub.add_parser("grid", help="inspect a grid")
    gsub = grid.add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = gsub.add_parser("show")
    c.add_argument("grid", help="builtin name or .json config")
    c.add_argument("--svg", action="store_true", help="draw a patch of the grid")
    c.add_argument("--radius", type=int, default=2)
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_grid_show)

    walk = sub.add_parser("walk", help="verify or generate walks")
    wsub = walk.add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = wsub.add_parser("verify")
    c.add_argument("--grid", required=True)
    c.add_argument("file", help="index-sequence text file")
    c.set_defaults(func=_cmd_walk_verify)
    c = wsub.add_parser("random")
    c.add_argument("--grid", required=True)
    c.add_argument("--steps", type=int, required=True)
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--no-backtrack", action="store_true")
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_walk_random)

    c = sub.add_parser("gray", help="binary reflected Gray codes")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--check", metavar="FILE", help="bit strings or index sequence to test")
    c.add_argument("--enumerate", action="store_true", help="count Gray codes by brute force")
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_gray)
    return p


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
