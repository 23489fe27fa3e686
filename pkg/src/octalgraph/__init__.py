"""Octal games played on graphs.

Exact Sprague-Grundy values by memoised search, closed forms for the game
0.33 on paths, cycles, subdivided stars and bistars, and suites that check
one against the other.
"""

from .closed_form import bistar_grundy, cycle_grundy, path_grundy, star_grundy, star_table
from .dsl import format_spec, parse_graph_spec, realize
from .engine import EvalCache, GrundyEngine, Outcome, grundy, mex, outcome, winning_moves
from .errors import InvalidArgumentError, OctalGraphError, ParseError, ResourceLimitError
from .graph import (
    BistarSpec,
    CaterpillarSpec,
    Graph,
    StarSpec,
    build_cycle,
    build_path,
    realize_bistar,
    realize_caterpillar,
    realize_star,
)
from .rules import Move, OctalCode, grundy_sequence, legal_moves, parse_code

__version__ = "0.1.0"

__all__ = [
    "BistarSpec",
    "CaterpillarSpec",
    "EvalCache",
    "Graph",
    "GrundyEngine",
    "GrundyEstimator",
    "InvalidArgumentError",
    "Move",
    "OctalCode",
    "OctalGraphError",
    "Outcome",
    "ParseError",
    "ResourceLimitError",
    "StarSpec",
    "bistar_grundy",
    "build_cycle",
    "build_path",
    "cycle_grundy",
    "format_spec",
    "grundy",
    "grundy_sequence",
    "legal_moves",
    "mex",
    "outcome",
    "parse_code",
    "parse_graph_spec",
    "path_grundy",
    "realize",
    "realize_bistar",
    "realize_caterpillar",
    "realize_star",
    "star_grundy",
    "star_table",
    "winning_moves",
]


def __getattr__(name):
    # sklearn is slow to import; only load it when the estimator is asked for
    if name == "GrundyEstimator":
        from .estimators import GrundyEstimator

        return GrundyEstimator
    raise AttributeError(f"module 'octalgraph' has no attribute {name!r}")
