"""Graph grids, index notation of walks, and integer L-systems."""

from .catalog import curve_entry, curve_names, curve_sequence, curve_walk, half_difference
from .errors import CatalogError, DomainError, FormatError, GridError, LSystemError, WalkError
from .gray import brgray, enumerate_gray_codes, is_brgray, is_gray_code, isometry_orbit
from .grid import GridSpec, Vertex, builtin_grid, embed_vertex, is_edge, make_grid, neighbors
from .lsystem import LSystem, apply_once, generation, generation_by_squaring, make_lsystem
from .walk import Walk, classify, concat, decode, encode, neg_reverse, reverse

__version__ = "0.1.0"
