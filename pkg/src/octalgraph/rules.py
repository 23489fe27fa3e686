"""Octal codes, legal moves on graphs, and the classical heap recursion."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InvalidArgumentError, ParseError
from .graph import Graph, bits_to_set, connected_subsets, iter_bits, mask_components, set_to_bits

__all__ = [
    "OctalCode",
    "Move",
    "parse_code",
    "decompose_digit",
    "recompose_digit",
    "legal_moves",
    "heap_grundy",
    "grundy_sequence",
    "detect_period",
    "EMPTY",
    "CONNECTED",
    "DISCONNECT",
]

# Names of the three clauses that can authorise a move.
EMPTY = "empty"
CONNECTED = "connected"
DISCONNECT = "disconnect"


def decompose_digit(u: int) -> tuple:
    """Split an octal digit into its (b1, b2, b3) flags."""
    if not 0 <= u <= 7:
        raise InvalidArgumentError(f"octal digit out of range: {u}")
    return (u & 1, (u >> 1) & 1, (u >> 2) & 1)


def recompose_digit(flags: tuple) -> int:
    b1, b2, b3 = flags
    return b1 + 2 * b2 + 4 * b3


@dataclass(frozen=True)
class OctalCode:
    """A finite octal code ``0.u1u2...uk``; ``digits[i-1]`` governs taking ``i`` vertices."""

    digits: tuple

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        if not digits:
            raise InvalidArgumentError("an octal code needs at least one digit")
        if any(not 0 <= d <= 7 for d in digits):
            raise InvalidArgumentError(f"octal digits must be in 0..7, got {digits}")
        if digits[-1] == 0:
            raise InvalidArgumentError("a finite octal code must end with a nonzero digit")
        object.__setattr__(self, "digits", digits)

    def flags(self, take: int) -> tuple:
        if 1 <= take <= len(self.digits):
            return decompose_digit(self.digits[take - 1])
        return (0, 0, 0)

    @property
    def sizes(self) -> tuple:
        """Removal sizes with a nonzero digit."""
        return tuple(i + 1 for i, d in enumerate(self.digits) if d)

    @property
    def is_subtraction_game(self) -> bool:
        return all(d in (0, 3) for d in self.digits)

    def __str__(self):
        return "0." + "".join(map(str, self.digits))


def parse_code(text: str) -> OctalCode:
    text = text.strip()
    if not text.startswith("0."):
        raise ParseError(f"octal code must start with '0.': {text!r}", token=text[:2] or text)
    body = text[2:]
    if not body:
        raise ParseError("octal code has no digits", token=text)
    for ch in body:
        if ch not in "01234567":
            raise ParseError(f"invalid octal digit {ch!r} in {text!r}", token=ch)
    if body[-1] == "0":
        raise ParseError(f"octal code {text!r} ends with a zero digit", token="0")
    return OctalCode(tuple(int(ch) for ch in body))


@dataclass(frozen=True)
class Move:
    """Removal of a connected vertex set; ``clause`` records which flag allowed it."""

    removed: frozenset
    clause: str

    def __iter__(self):
        return iter(sorted(self.removed))

    def __str__(self):
        return "{" + ",".join(map(str, sorted(self.removed))) + "}"


def _removal_sets(nbr: tuple, component: int, size: int) -> Iterator[int]:
    if size == 1:
        for v in iter_bits(component):
            yield 1 << v
    elif size == 2:
        for v in iter_bits(component):
            for u in iter_bits(nbr[v] & component):
                if u > v:
                    yield (1 << v) | (1 << u)
    else:
        yield from connected_subsets(nbr, component, size)


def remainder_count(nbr: tuple, component: int, removed: int, tree: bool) -> int:
    """Number of components left when ``removed`` is taken out of ``component``.

    For a tree component the count follows from degrees alone: removing a
    connected set X leaves ``sum(deg(x)) - 2|X| + 2`` pieces.
    """
    rest = component & ~removed
    if not rest:
        return 0
    if tree:
        total = 0
        for v in iter_bits(removed):
            total += (nbr[v] & component).bit_count()
        return total - 2 * removed.bit_count() + 2
    return len(mask_components(nbr, rest))


def component_options(nbr: tuple, component: int, code: OctalCode, tree: bool) -> Iterator[tuple]:
    """Yield ``(removed_mask, clause)`` for every legal move inside one component."""
    for i, digit in enumerate(code.digits, start=1):
        if not digit or i > component.bit_count():
            continue
        b1, b2, b3 = decompose_digit(digit)
        for x in _removal_sets(nbr, component, i):
            pieces = remainder_count(nbr, component, x, tree)
            if pieces == 0:
                if b1:
                    yield x, EMPTY
            elif pieces == 1:
                if b2:
                    yield x, CONNECTED
            elif b3:
                yield x, DISCONNECT


def legal_moves(g: Graph, code: OctalCode) -> list:
    """Every legal move on ``g``, ordered lexicographically by sorted vertex ids."""
    nbr = g.neighbor_masks
    moves = []
    for comp in mask_components(nbr, g.full_mask):
        for x, clause in component_options(nbr, comp, code, tree=False):
            moves.append(Move(bits_to_set(x), clause))
    moves.sort(key=lambda m: sorted(m.removed))
    return moves


def check_move(g: Graph, code: OctalCode, move: Move) -> bool:
    """Re-derive legality of ``move`` from scratch, including its recorded clause."""
    nbr = g.neighbor_masks
    x = set_to_bits(move.removed)
    if not x or x & ~g.full_mask:
        return False
    if len(mask_components(nbr, x)) != 1:
        return False
    start = next(iter_bits(x))
    comp = next(c for c in mask_components(nbr, g.full_mask) if c >> start & 1)
    if x & ~comp:
        return False
    b1, b2, b3 = code.flags(len(move.removed))
    rest = comp & ~x
    if not rest:
        clause, allowed = EMPTY, b1
    elif len(mask_components(nbr, rest)) == 1:
        clause, allowed = CONNECTED, b2
    else:
        clause, allowed = DISCONNECT, b3
    return bool(allowed) and clause == move.clause


# -- heaps ------------------------------------------------------------------------


def _mex(values) -> int:
    seen = set(values)
    m = 0
    while m in seen:
        m += 1
    return m


def _extend_sequence(code: OctalCode, seq: list, n_max: int) -> None:
    for n in range(len(seq), n_max + 1):
        opts = set()
        for i in code.sizes:
            if i > n:
                break
            b1, b2, b3 = code.flags(i)
            rest = n - i
            if rest == 0:
                if b1:
                    opts.add(0)
                continue
            if b2:
                opts.add(seq[rest])
            if b3:
                for a in range(1, rest // 2 + 1):
                    opts.add(seq[a] ^ seq[rest - a])
        seq.append(_mex(opts))


def heap_grundy(code: OctalCode, n: int, cache: Optional[list] = None) -> int:
    """Grundy value of a single heap of ``n`` counters.

    ``cache`` is a list holding G(0), G(1), ... for this code; it is
    extended in place, so callers can keep one per code.
    """
    if n < 0:
        raise InvalidArgumentError("heap size must be nonnegative")
    seq = cache if cache is not None else []
    _extend_sequence(code, seq, n)
    return seq[n]


def grundy_sequence(code: OctalCode, n_max: int) -> list:
    if n_max < 0:
        raise InvalidArgumentError("n_max must be nonnegative")
    seq: list = []
    _extend_sequence(code, seq, n_max)
    return seq


def detect_period(seq) -> Optional[tuple]:
    """Smallest candidate ``(preperiod, period)`` visible in a finite prefix.

    Periods are tried in increasing order and, for each, the smallest
    preperiod; a candidate is accepted only if the periodic stretch covers
    at least two full periods.  The answer is a hint, not a proof.
    """
    seq = list(seq)
    n = len(seq)
    for p in range(1, n // 2 + 1):
        # smallest s from which seq[i] == seq[i+p] holds through the end
        s = n - p
        while s > 0 and seq[s - 1] == seq[s - 1 + p]:
            s -= 1
        if n - s >= 2 * p:
            return s, p
    return None
