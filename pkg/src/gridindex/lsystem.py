"""Parallel rewriting (0L) systems over integer alphabets.

Rules come either from an explicit table or from a named formula.  Two
closures derive rules for negative symbols from positive ones:

* ``mirror``:  P(-k) = -R(P(k))   (reverse the body and negate it)
* ``negate``:  P(-k) = -P(k)

Strings are tuples of ints.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .errors import LSystemError

__all__ = [
    "CLOSURES",
    "FORMULAS",
    "LSystem",
    "GenString",
    "make_lsystem",
    "apply_once",
    "generation",
    "square_rules",
    "generation_by_squaring",
    "partition_symbols",
    "is_self_similar",
    "string_reverse",
]

CLOSURES = ("explicit", "mirror", "negate")

Rule = Callable[[int], tuple[int, ...]]


@lru_cache(maxsize=None)
def _brgray(k: int) -> tuple[int, ...]:
    if k == 0:
        return (0,)
    if k == 1:
        return (1, 2, -1)
    return (k + 1,)


@lru_cache(maxsize=None)
def _takagi(n: int) -> tuple[int, ...]:
    return (n + 1, n - 1)


# name -> (rule on the symbols the closure does not derive, closure)
FORMULAS: dict[str, tuple[Rule, str]] = {
    "brgray": (_brgray, "mirror"),
    "takagi": (_takagi, "explicit"),
}


def string_reverse(s: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(s))


def _negated(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(-x for x in s)


@dataclass(frozen=True)
class GenString:
    symbols: tuple[int, ...]
    generation: int

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]


@dataclass(frozen=True)
class LSystem:
    """Validated system; build it with :func:`make_lsystem`.

    ``alphabet`` is a frozenset, or None for all integers (formula rules).
    ``table`` holds the rules as given (closure not applied); ``formula``
    names a builtin rule instead.
    """

    alphabet: frozenset[int] | None
    table: Mapping[int, tuple[int, ...]] | None
    formula: str | None
    closure: str
    start: tuple[int, ...]
    _effective: Mapping[int, tuple[int, ...]] | None = field(default=None, repr=False, compare=False)

    def rule(self, x: int) -> tuple[int, ...]:
        """P(x), closure applied."""
        if self._effective is not None:
            try:
                return self._effective[x]
            except KeyError:
                raise LSystemError(f"no rule for symbol {x}") from None
        base = FORMULAS[self.formula][0]
        if x < 0 and self.closure == "mirror":
            return _negated(reversed(base(-x)))
        if x < 0 and self.closure == "negate":
            return _negated(base(-x))
        return base(x)

    @property
    def effective_rules(self) -> dict[int, tuple[int, ...]] | None:
        """Closure-expanded table, or None for formula systems."""
        return None if self._effective is None else dict(self._effective)


def _close_table(table: Mapping[int, tuple[int, ...]], closure: str) -> dict[int, tuple[int, ...]]:
    out = dict(table)
    if closure == "explicit":
        return out
    for k, body in table.items():
        if k < 0 and -k in table:
            raise LSystemError(
                f"rule for {k} given explicitly although {closure} closure derives it from {-k}"
            )
    for k, body in table.items():
        if k > 0:
            out[-k] = _negated(reversed(body)) if closure == "mirror" else _negated(body)
    return out


def make_lsystem(
    alphabet=None,
    rules: Mapping[int, Sequence[int]] | str | None = None,
    closure: str | None = None,
    start: Sequence[int] | int = (0,),
) -> LSystem:
    """Validate and build an :class:`LSystem`.

    ``rules`` is an explicit table ``{symbol: body}`` or the name of a
    formula in :data:`FORMULAS`.  ``alphabet`` may be an iterable of ints,
    ``"integers"``, or None (derived from the table).  ``start`` may be a
    single symbol or a string.
    """
    if isinstance(start, int):
        start = (start,)
    start_t = tuple(int(x) for x in start)
    if rules is None:
        raise LSystemError("rules are required")

    if isinstance(rules, str):
        if rules not in FORMULAS:
            raise LSystemError(f"unknown formula {rules!r}")
        own = FORMULAS[rules][1]
        if closure is not None and closure != own:
            raise LSystemError(f"formula {rules!r} uses {own} closure, not {closure}")
        if alphabet not in (None, "integers"):
            raise LSystemError("formula rules are defined over all integers")
        return LSystem(None, None, rules, own, start_t)

    closure = closure or "explicit"
    if closure not in CLOSURES:
        raise LSystemError(f"unknown closure {closure!r}")
    if alphabet == "integers":
        raise LSystemError("an explicit table cannot cover all integers; use a formula")
    table = {int(k): tuple(int(x) for x in body) for k, body in rules.items()}
    effective = _close_table(table, closure)

    # every symbol reachable from the start or any body needs a rule
    pending = list(start_t) + [x for body in effective.values() for x in body]
    seen = set()
    while pending:
        x = pending.pop()
        if x in seen:
            continue
        seen.add(x)
        if x not in effective:
            raise LSystemError(f"missing rule for symbol {x}")
        pending.extend(effective[x])

    if alphabet is None:
        alpha = frozenset(effective)
    else:
        alpha = frozenset(int(x) for x in alphabet)
        outside = sorted(seen - alpha) + sorted(set(effective) - alpha)
        if outside:
            raise LSystemError(f"symbols {outside} are not in the alphabet")
        missing = sorted(alpha - set(effective))
        if missing:
            raise LSystemError(f"missing rule for symbol {missing[0]}")
    return LSystem(alpha, table, None, closure, start_t, effective)


def _apply(rule: Rule, s: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in s:
        out.extend(rule(x))
    return tuple(out)


def apply_once(ls: LSystem, s: Sequence[int]) -> tuple[int, ...]:
    return _apply(ls.rule, s)


def generation(ls: LSystem, n: int) -> GenString:
    """P^n(start); generation 0 is the start itself."""
    if n < 0:
        raise LSystemError("generation must be non-negative")
    s = ls.start
    for _ in range(n):
        s = _apply(ls.rule, s)
    return GenString(s, n)


def square_rules(rules):
    """Compose a rule set with itself: v -> P(P(v)).

    A mapping gives back a dict over the same keys.  A callable gives back a
    callable that expands each symbol on first use and remembers it; the
    cache belongs to the returned function only.
    """
    if isinstance(rules, Mapping):
        return {v: _apply(rules.__getitem__, body) for v, body in rules.items()}

    cache: dict[int, tuple[int, ...]] = {}

    def squared(x: int) -> tuple[int, ...]:
        try:
            return cache[x]
        except KeyError:
            out = cache[x] = _apply(rules, rules(x))
            return out

    return squared


def generation_by_squaring(ls: LSystem, m: int) -> GenString:
    """P^(2^m)(start) via m rule squarings and a single application."""
    if m < 0:
        raise LSystemError("m must be non-negative")
    rule = ls.effective_rules if ls.effective_rules is not None else ls.rule
    for _ in range(m):
        rule = square_rules(rule)
    lookup = rule.__getitem__ if isinstance(rule, Mapping) else rule
    return GenString(_apply(lookup, ls.start), 2**m)


def partition_symbols(ls: LSystem, upto: int | None = None) -> tuple[frozenset[int], frozenset[int]]:
    """Split symbols into constants (P(x) = x) and variables.

    Formula systems have no finite alphabet; pass ``upto`` to examine
    symbols -upto..upto.
    """
    if ls.alphabet is not None:
        symbols = ls.alphabet
    elif upto is None:
        raise LSystemError("formula systems need an explicit bound")
    else:
        symbols = range(-upto, upto + 1)
    constants = frozenset(x for x in symbols if ls.rule(x) == (x,))
    return constants, frozenset(symbols) - constants


def is_self_similar(ls: LSystem) -> bool:
    """True when P(start) begins with start and is longer than it."""
    p = apply_once(ls, ls.start)
    n = len(ls.start)
    return len(p) > n and p[:n] == ls.start
