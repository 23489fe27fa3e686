"""Exact Sprague-Grundy evaluation of octal games on graphs.

A position is a vertex subset of a fixed host graph, held as an int bitmask.
Each connected component is solved on its own and the results are combined
by XOR, so a disconnecting move simply produces several smaller
subproblems.  Two memo layers are used:

* a per-host table ``mask -> value`` (cheap lookups, exact), and
* an :class:`EvalCache` keyed by the canonical component key, shared across
  hosts for the same code, so isomorphic components are solved once.

Evaluation runs on an explicit stack, so long paths do not hit Python's
recursion limit.
"""

from __future__ import annotations

import enum
import threading
from typing import Iterable, Optional

from .canonical import component_key, is_tree_mask
from .errors import InvalidArgumentError, ResourceLimitError
from .graph import Graph, mask_components
from .rules import CONNECTED, OctalCode, component_options, legal_moves

__all__ = [
    "DEFAULT_MAX_POSITIONS",
    "EvalCache",
    "GrundyEngine",
    "Outcome",
    "mex",
    "grundy",
    "outcome",
    "winning_moves",
    "option_values",
]

DEFAULT_MAX_POSITIONS = 50_000_000


class Outcome(str, enum.Enum):
    N = "N"
    P = "P"

    @classmethod
    def from_grundy(cls, value: int) -> "Outcome":
        return cls.P if value == 0 else cls.N


def mex(values: Iterable[int]) -> int:
    """Smallest nonnegative integer not in ``values``."""
    seen = set(values)
    m = 0
    while m in seen:
        m += 1
    return m


class EvalCache:
    """Insert-only table of component Grundy values for one octal code.

    Writers always store the same value for a given key, so concurrent
    inserts are harmless; a lock only guards the counters.
    """

    def __init__(self, code: OctalCode, max_entries: int = DEFAULT_MAX_POSITIONS):
        self.code = code
        self.max_entries = max_entries
        self._table: dict = {}
        self.hits = 0
        self.misses = 0
        self._lock = threading.Lock()

    def get(self, key):
        value = self._table.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key, value: int) -> None:
        previous = self._table.setdefault(key, value)
        if previous != value:
            raise AssertionError(f"conflicting Grundy values for {key!r}: {previous} vs {value}")
        if len(self._table) > self.max_entries:
            raise ResourceLimitError(self.max_entries)

    def __len__(self):
        return len(self._table)

    def __contains__(self, key):
        return key in self._table

    def stats(self) -> dict:
        return {"entries": len(self._table), "hits": self.hits, "misses": self.misses}


class _HostSolver:
    """Solves components of one host graph, memoising by mask."""

    def __init__(self, graph: Graph, code: OctalCode, cache: Optional[EvalCache], max_positions: int):
        self.nbr = graph.neighbor_masks
        self.code = code
        self.cache = cache
        self.max_positions = max_positions
        self.tree_host = graph.is_forest()
        self.local: dict = {}

    def key(self, comp: int) -> str:
        tree = True if self.tree_host else is_tree_mask(self.nbr, comp)
        return component_key(self.nbr, comp, tree)

    def pieces(self, rest: int) -> tuple:
        if not rest:
            return ()
        return tuple(mask_components(self.nbr, rest))

    def options(self, comp: int) -> list:
        """Each option as the tuple of component masks it leaves behind."""
        nbr = self.nbr
        tree = self.tree_host or is_tree_mask(nbr, comp)
        out = []
        for removed, clause in component_options(nbr, comp, self.code, tree):
            rest = comp & ~removed
            if clause == CONNECTED:
                out.append((rest,))
            else:
                out.append(self.pieces(rest))
        return out

    def value(self, root: int) -> int:
        local = self.local
        found = local.get(root)
        if found is not None:
            return found
        cache = self.cache
        pending: dict = {}
        stack = [root]
        while stack:
            m = stack[-1]
            if m in local:
                stack.pop()
                continue
            entry = pending.get(m)
            if entry is None:
                key = self.key(m) if cache is not None else None
                if key is not None:
                    v = cache.get(key)
                    if v is not None:
                        local[m] = v
                        stack.pop()
                        continue
                opts = self.options(m)
                pending[m] = (key, opts)
                need = {c for opt in opts for c in opt if c not in local}
                if need:
                    stack.extend(sorted(need))
                    continue
            else:
                key, opts = entry
            seen = set()
            for opt in opts:
                x = 0
                for c in opt:
                    x ^= local[c]
                seen.add(x)
            v = 0
            while v in seen:
                v += 1
            local[m] = v
            if len(local) > self.max_positions:
                raise ResourceLimitError(self.max_positions)
            if key is not None:
                cache.put(key, v)
            del pending[m]
            stack.pop()
        return local[root]

    def total(self, mask: int) -> int:
        x = 0
        for comp in mask_components(self.nbr, mask):
            x ^= self.value(comp)
        return x


class GrundyEngine:
    """Brute-force Grundy evaluator bound to one octal code.

    ``canonical=False`` disables the shared isomorphism cache and keeps only
    the exact per-graph memo; it exists to cross-check the cache.
    """

    def __init__(
        self,
        code: OctalCode,
        cache: Optional[EvalCache] = None,
        max_positions: int = DEFAULT_MAX_POSITIONS,
        canonical: bool = True,
    ):
        if cache is not None and cache.code != code:
            raise InvalidArgumentError(f"cache belongs to code {cache.code}, not {code}")
        if canonical and cache is None:
            cache = EvalCache(code, max_positions)
        self.code = code
        self.cache = cache if canonical else None
        self.max_positions = max_positions
        self.positions_evaluated = 0

    def _solver(self, g: Graph) -> _HostSolver:
        return _HostSolver(g, self.code, self.cache, self.max_positions)

    def grundy(self, g: Graph) -> int:
        solver = self._solver(g)
        value = solver.total(g.full_mask)
        self.positions_evaluated += len(solver.local)
        return value

    def outcome(self, g: Graph) -> Outcome:
        return Outcome.from_grundy(self.grundy(g))

    def option_values(self, g: Graph) -> list:
        """``(move, grundy value of the resulting position)`` for every legal move."""
        solver = self._solver(g)
        nbr = g.neighbor_masks
        comps = mask_components(nbr, g.full_mask)
        comp_values = {c: solver.value(c) for c in comps}
        total = 0
        for v in comp_values.values():
            total ^= v
        out = []
        for move in legal_moves(g, self.code):
            removed = 0
            for v in move.removed:
                removed |= 1 << v
            home = next(c for c in comps if c & removed)
            after = total ^ comp_values[home]
            for piece in solver.pieces(home & ~removed):
                after ^= solver.value(piece)
            out.append((move, after))
        self.positions_evaluated += len(solver.local)
        return out

    def winning_moves(self, g: Graph) -> list:
        return [move for move, value in self.option_values(g) if value == 0]

    def cache_stats(self) -> dict:
        if self.cache is None:
            return {"entries": 0, "hits": 0, "misses": 0}
        return self.cache.stats()


def _engine(code: OctalCode, cache: Optional[EvalCache]) -> GrundyEngine:
    if cache is None:
        return GrundyEngine(code)
    return GrundyEngine(code, cache=cache, max_positions=cache.max_entries)


def grundy(g: Graph, code: OctalCode, cache: Optional[EvalCache] = None) -> int:
    return _engine(code, cache).grundy(g)


def outcome(g: Graph, code: OctalCode, cache: Optional[EvalCache] = None) -> Outcome:
    return _engine(code, cache).outcome(g)


def winning_moves(g: Graph, code: OctalCode, cache: Optional[EvalCache] = None) -> list:
    return _engine(code, cache).winning_moves(g)


def option_values(g: Graph, code: OctalCode, cache: Optional[EvalCache] = None) -> list:
    return _engine(code, cache).option_values(g)
