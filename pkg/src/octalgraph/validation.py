"""Input coercion shared by the estimators and the CLI."""

from __future__ import annotations

from .dsl import CycleSpec, EdgeListSpec, PathSpec, parse_graph_spec, realize
from .errors import InvalidArgumentError
from .graph import BistarSpec, CaterpillarSpec, Graph, StarSpec
from .rules import OctalCode, parse_code

_SPEC_TYPES = (PathSpec, CycleSpec, StarSpec, BistarSpec, CaterpillarSpec, EdgeListSpec)


def check_code(code) -> OctalCode:
    if isinstance(code, OctalCode):
        return code
    if isinstance(code, str):
        return parse_code(code)
    raise InvalidArgumentError(f"expected an octal code string or OctalCode, got {type(code).__name__}")


def check_graph(x):
    """Return ``(spec, graph)``; ``spec`` is None when ``x`` was a bare Graph."""
    if isinstance(x, Graph):
        return None, x
    if isinstance(x, str):
        x = parse_graph_spec(x)
    if isinstance(x, _SPEC_TYPES):
        return x, realize(x)
    raise InvalidArgumentError(f"cannot interpret {type(x).__name__} as a graph")


def check_graphs(X) -> list:
    if isinstance(X, (str, Graph)) or isinstance(X, _SPEC_TYPES):
        raise InvalidArgumentError("expected a sequence of graphs, got a single graph")
    return [check_graph(x) for x in X]
