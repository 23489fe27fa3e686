"""One-line text descriptions of game boards.

Forms::

    path:<n>
    cycle:<n>
    star:<l1,l2,...>          star: is P_1, star:empty is the empty graph
    bistar:<arms>/<m>/<arms>  either side may be ``empty``
    cat:<spine>:<p1,p2,...>
    edges:<n>;<u-v,u-v,...>
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgumentError, ParseError
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

__all__ = ["PathSpec", "CycleSpec", "EdgeListSpec", "parse_graph_spec", "realize", "format_spec", "load_graph_specs"]


@dataclass(frozen=True)
class PathSpec:
    n: int

    def __str__(self):
        return f"path:{self.n}"


@dataclass(frozen=True)
class CycleSpec:
    n: int

    def __str__(self):
        return f"cycle:{self.n}"


@dataclass(frozen=True)
class EdgeListSpec:
    n: int
    edges: tuple

    def __str__(self):
        return f"edges:{self.n};" + ",".join(f"{u}-{v}" for u, v in self.edges)


def _int(token: str, what: str) -> int:
    token = token.strip()
    if not token or not (token.isdigit()):
        raise ParseError(f"expected a nonnegative integer for {what}, got {token!r}", token=token)
    return int(token)


def _int_list(text: str, what: str) -> list:
    text = text.strip()
    if not text:
        return []
    return [_int(t, what) for t in text.split(",")]


def _star(text: str) -> StarSpec:
    text = text.strip()
    if text == "empty":
        return StarSpec.empty()
    arms = _int_list(text, "arm length")
    for a in arms:
        if a < 1:
            raise ParseError("arm lengths must be positive", token=str(a))
    return StarSpec(tuple(arms))


def parse_graph_spec(text: str):
    """Parse one DSL line into its symbolic spec object."""
    text = text.strip()
    kind, sep, body = text.partition(":")
    if not sep:
        raise ParseError(f"graph spec must look like kind:args, got {text!r}", token=text)
    try:
        if kind == "path":
            return PathSpec(_int(body, "path length"))
        if kind == "cycle":
            n = _int(body, "cycle length")
            if n < 3:
                raise ParseError(f"a cycle needs at least 3 vertices, got {n}", token=body)
            return CycleSpec(n)
        if kind == "star":
            return _star(body)
        if kind == "bistar":
            parts = body.split("/")
            if len(parts) != 3:
                raise ParseError(f"bistar needs left/m/right, got {body!r}", token=body)
            return BistarSpec(_star(parts[0]), _int(parts[1], "middle path length"), _star(parts[2]))
        if kind == "cat":
            spine, sep2, legs = body.partition(":")
            return CaterpillarSpec(_int(spine, "spine length"), frozenset(_int_list(legs, "leg position")))
        if kind == "edges":
            count, sep2, rest = body.partition(";")
            n = _int(count, "vertex count")
            edges = []
            for item in filter(None, (t.strip() for t in rest.split(","))):
                u, dash, v = item.partition("-")
                if not dash:
                    raise ParseError(f"edge must be u-v, got {item!r}", token=item)
                edges.append((_int(u, "edge endpoint"), _int(v, "edge endpoint")))
            spec = EdgeListSpec(n, tuple(edges))
            Graph(n, edges)  # validate now rather than at realisation
            return spec
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), token=body) from exc
    raise ParseError(f"unknown graph kind {kind!r}", token=kind)


def realize(spec) -> Graph:
    if isinstance(spec, Graph):
        return spec
    if isinstance(spec, str):
        spec = parse_graph_spec(spec)
    if isinstance(spec, PathSpec):
        return build_path(spec.n)
    if isinstance(spec, CycleSpec):
        return build_cycle(spec.n)
    if isinstance(spec, StarSpec):
        return realize_star(spec)
    if isinstance(spec, BistarSpec):
        return realize_bistar(spec)
    if isinstance(spec, CaterpillarSpec):
        return realize_caterpillar(spec)
    if isinstance(spec, EdgeListSpec):
        return Graph(spec.n, spec.edges)
    raise TypeError(f"cannot realise {type(spec).__name__}")


def _star_dsl(s: StarSpec) -> str:
    return "empty" if not s.present else ",".join(map(str, s.arms))


def format_spec(spec) -> str:
    """Inverse of :func:`parse_graph_spec`."""
    if isinstance(spec, StarSpec):
        return "star:" + _star_dsl(spec)
    if isinstance(spec, BistarSpec):
        return f"bistar:{_star_dsl(spec.left)}/{spec.middle_edges}/{_star_dsl(spec.right)}"
    return str(spec)


def load_graph_specs(path) -> list:
    """Read one spec per line from a file; blank lines and ``#`` comments are skipped."""
    specs = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                specs.append(parse_graph_spec(line))
    return specs
