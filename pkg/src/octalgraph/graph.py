"""Finite simple undirected graphs and the tree families used as game boards.

Vertices are the integers ``0..n-1``.  Internally every vertex subset is also
available as an ``int`` bitmask (bit ``v`` set iff ``v`` is in the set); the
search engine works almost entirely on those masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import InvalidArgumentError

__all__ = [
    "Graph",
    "StarSpec",
    "BistarSpec",
    "CaterpillarSpec",
    "build_path",
    "build_cycle",
    "realize_star",
    "realize_bistar",
    "realize_caterpillar",
    "connected_components",
    "enumerate_connected_removals",
    "remove_vertices",
    "disjoint_union",
    "attach_path",
    "describe_graph",
]


# -- bitmask helpers ---------------------------------------------------------


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_set(mask: int) -> frozenset:
    return frozenset(iter_bits(mask))


def set_to_bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def component_of(nbr: tuple, mask: int, start: int) -> int:
    """Mask of the component of ``start`` inside the subgraph induced by ``mask``."""
    comp = 1 << start
    frontier = comp
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= nbr[v]
        frontier = grow & mask & ~comp
        comp |= frontier
    return comp


def mask_components(nbr: tuple, mask: int) -> list:
    """Component masks of the subgraph induced by ``mask``, ordered by lowest vertex."""
    comps = []
    while mask:
        low = mask & -mask
        comp = component_of(nbr, mask, low.bit_length() - 1)
        comps.append(comp)
        mask &= ~comp
    return comps


def connected_subsets(nbr: tuple, mask: int, size: int) -> Iterator[int]:
    """Yield every connected vertex set of ``size`` vertices inside ``mask``.

    Each set is produced exactly once: a set is grown from its smallest
    vertex and may only be extended by larger vertices.
    """
    if size <= 0:
        return
    for v in iter_bits(mask):
        allowed = mask & ~((1 << (v + 1)) - 1)
        yield from _grow(nbr, 1 << v, (1 << v) | nbr[v], nbr[v] & allowed, allowed, size - 1)


def _grow(nbr, current, seen, extension, allowed, remaining):
    # ESU-style extension: new candidates come only from the exclusive
    # neighbourhood of the vertex just added, so no set is emitted twice.
    if remaining == 0:
        yield current
        return
    ext = extension
    while ext:
        low = ext & -ext
        ext ^= low
        w = low.bit_length() - 1
        new_ext = ext | (nbr[w] & allowed & ~seen)
        yield from _grow(nbr, current | low, seen | nbr[w] | low, new_ext, allowed, remaining - 1)


# -- graph value --------------------------------------------------------------


class Graph:
    """Immutable finite simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_adj", "_nbr", "_hash")

    def __init__(self, vertex_count: int = 0, edges: Iterable = ()):
        if vertex_count < 0:
            raise InvalidArgumentError("vertex_count must be nonnegative")
        adj = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidArgumentError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)
        self._nbr = tuple(set_to_bits(a) for a in self._adj)
        self._hash = None

    @classmethod
    def from_adjacency(cls, adjacency) -> "Graph":
        n = len(adjacency)
        edges = []
        for u, nb in enumerate(adjacency):
            for v in nb:
                if u not in adjacency[v]:
                    raise InvalidArgumentError(f"adjacency is not symmetric at ({u}, {v})")
                if u < v:
                    edges.append((u, v))
        return cls(n, edges)

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def adjacency(self) -> tuple:
        return self._adj

    @property
    def neighbor_masks(self) -> tuple:
        return self._nbr

    @property
    def full_mask(self) -> int:
        return (1 << len(self._adj)) - 1

    def __len__(self):
        return len(self._adj)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list:
        return [(u, v) for u, nb in enumerate(self._adj) for v in sorted(nb) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def is_forest(self) -> bool:
        return self.edge_count == self.vertex_count - len(mask_components(self._nbr, self.full_mask))

    def is_connected(self) -> bool:
        return len(mask_components(self._nbr, self.full_mask)) <= 1

    def check_invariants(self) -> None:
        for u, nb in enumerate(self._adj):
            if u in nb:
                raise AssertionError(f"self-loop at {u}")
            for v in nb:
                if not 0 <= v < len(self._adj):
                    raise AssertionError(f"neighbor {v} of {u} out of range")
                if u not in self._adj[v]:
                    raise AssertionError(f"asymmetric edge ({u}, {v})")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self):
        return f"Graph({self.vertex_count}, {self.edges()})"


# -- constructors ---------------------------------------------------------------


def build_path(n: int) -> Graph:
    if n < 0:
        raise InvalidArgumentError("path length must be nonnegative")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidArgumentError(f"a simple cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


@dataclass(frozen=True)
class StarSpec:
    """Subdivided star: a centre with one path of ``l`` vertices per arm.

    ``present=False`` is the empty graph; a present star without arms is P_1.
    """

    arms: tuple = ()
    present: bool = True

    def __post_init__(self):
        arms = tuple(sorted(int(a) for a in self.arms))
        if any(a < 1 for a in arms):
            raise InvalidArgumentError(f"arm lengths must be positive, got {arms}")
        if not self.present and arms:
            raise InvalidArgumentError("an absent star cannot have arms")
        object.__setattr__(self, "arms", arms)

    @classmethod
    def empty(cls) -> "StarSpec":
        return cls((), present=False)

    @classmethod
    def of(cls, *arms) -> "StarSpec":
        return cls(tuple(arms))

    @property
    def vertex_count(self) -> int:
        return 1 + sum(self.arms) if self.present else 0

    def with_arm(self, length: int) -> "StarSpec":
        """Star with one more arm; a length-0 arm leaves the star unchanged."""
        if not self.present:
            raise InvalidArgumentError("cannot attach an arm to the empty graph")
        if length == 0:
            return self
        return StarSpec(self.arms + (length,))

    def __str__(self):
        if not self.present:
            return "empty"
        return "S_{" + ",".join(map(str, self.arms)) + "}"


@dataclass(frozen=True)
class BistarSpec:
    left: StarSpec
    middle_edges: int
    right: StarSpec

    def __post_init__(self):
        if self.middle_edges < 0:
            raise InvalidArgumentError("middle path length must be nonnegative")

    @property
    def vertex_count(self) -> int:
        return realize_bistar(self).vertex_count

    def as_star(self):
        """The equivalent StarSpec when the bistar degenerates to a star, else None.

        ``m == 0`` merges the two centres; an absent side turns the middle
        path into an arm of the other star.
        """
        left, m, right = self.left, self.middle_edges, self.right
        if not left.present and not right.present:
            if m <= 1:
                return StarSpec.empty()
            # P_{m-1}: a centre plus one arm of m-2 vertices
            return StarSpec(() if m == 2 else (m - 2,))
        if m == 0:
            if not left.present:
                return right
            if not right.present:
                return left
            return StarSpec(left.arms + right.arms)
        if not left.present:
            return right.with_arm(m - 1)
        if not right.present:
            return left.with_arm(m - 1)
        return None

    def __str__(self):
        return f"{self.left}-{self.middle_edges}-{self.right}"


@dataclass(frozen=True)
class CaterpillarSpec:
    spine_length: int
    leg_positions: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.spine_length < 1:
            raise InvalidArgumentError("spine must have at least one vertex")
        legs = frozenset(int(p) for p in self.leg_positions)
        bad = sorted(p for p in legs if not 0 <= p < self.spine_length)
        if bad:
            raise InvalidArgumentError(f"leg positions {bad} outside spine of length {self.spine_length}")
        object.__setattr__(self, "leg_positions", legs)

    def mirrored(self) -> "CaterpillarSpec":
        last = self.spine_length - 1
        return CaterpillarSpec(self.spine_length, frozenset(last - p for p in self.leg_positions))

    def __str__(self):
        return f"cat:{self.spine_length}:" + ",".join(map(str, sorted(self.leg_positions)))


def _star_edges(spec: StarSpec, centre: int, first_free: int):
    edges = []
    nxt = first_free
    for length in spec.arms:
        prev = centre
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return edges, nxt


def realize_star(spec: StarSpec) -> Graph:
    """Centre is vertex 0; arms follow in sorted order, each listed outward."""
    if not spec.present:
        return Graph(0)
    edges, n = _star_edges(spec, 0, 1)
    return Graph(n, edges)


def realize_bistar(spec: BistarSpec) -> Graph:
    """Left centre is 0, then the left arms, the middle path, the right centre and its arms."""
    degenerate = spec.as_star()
    if degenerate is not None:
        return realize_star(degenerate)
    left_edges, nxt = _star_edges(spec.left, 0, 1)
    edges = list(left_edges)
    prev = 0
    for _ in range(spec.middle_edges - 1):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    right_centre = nxt
    edges.append((prev, right_centre))
    right_edges, n = _star_edges(spec.right, right_centre, right_centre + 1)
    edges.extend(right_edges)
    return Graph(n, edges)


def realize_caterpillar(spec: CaterpillarSpec) -> Graph:
    """Spine vertices are ``0..spine_length-1``; legs are numbered after them in spine order."""
    edges = [(i, i + 1) for i in range(spec.spine_length - 1)]
    n = spec.spine_length
    for p in sorted(spec.leg_positions):
        edges.append((p, n))
        n += 1
    return Graph(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.vertex_count
    return Graph(offset, edges)


def attach_path(g: Graph, vertex: int, length: int) -> Graph:
    """Hang a new path of ``length`` vertices from ``vertex`` (new ids appended)."""
    if not 0 <= vertex < g.vertex_count:
        raise InvalidArgumentError(f"vertex {vertex} not in graph")
    edges = g.edges()
    prev, n = vertex, g.vertex_count
    for _ in range(length):
        edges.append((prev, n))
        prev = n
        n += 1
    return Graph(n, edges)


# -- queries --------------------------------------------------------------------


def connected_components(g: Graph) -> list:
    return [bits_to_set(c) for c in mask_components(g.neighbor_masks, g.full_mask)]


def _sorted_sets(masks) -> list:
    return sorted((bits_to_set(m) for m in masks), key=sorted)


def enumerate_connected_removals(g: Graph, size: int) -> list:
    """All vertex sets of ``size`` vertices inducing a connected subgraph, lexicographic order."""
    if size < 1:
        raise InvalidArgumentError("removal size must be at least 1")
    return _sorted_sets(connected_subsets(g.neighbor_masks, g.full_mask, size))


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Subgraph induced by ``mask`` with ids re-compacted in increasing order."""
    keep = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u in keep for v in g.adjacency[u] if u < v and v in index]
    return Graph(len(keep), edges)


def remove_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    vertices = set(vertices)
    bad = sorted(v for v in vertices if not 0 <= v < g.vertex_count)
    if bad:
        raise InvalidArgumentError(f"vertex ids {bad} out of range for {g.vertex_count} vertices")
    return induced_subgraph(g, g.full_mask & ~set_to_bits(vertices))


def _describe_component(g: Graph, comp: int) -> str:
    nbr = g.neighbor_masks
    verts = list(iter_bits(comp))
    degs = {v: (nbr[v] & comp).bit_count() for v in verts}
    edges = sum(degs.values()) // 2
    n = len(verts)
    if edges == n - 1:
        hubs = [v for v in verts if degs[v] >= 3]
        if not hubs:
            return f"P_{n}"
        if len(hubs) == 1:
            centre = hubs[0]
            arms = []
            for start in iter_bits(nbr[centre] & comp):
                length, prev, cur = 1, centre, start
                while degs[cur] == 2:
                    prev, cur = cur, next(u for u in iter_bits(nbr[cur] & comp) if u != prev)
                    length += 1
                arms.append(length)
            return "S_{" + ",".join(map(str, sorted(arms))) + "}"
        return f"tree({n})"
    if edges == n and all(d == 2 for d in degs.values()):
        return f"C_{n}"
    return f"graph({n},{edges})"


def describe_graph(g: Graph) -> str:
    """Short human-readable name of a position, e.g. ``S_{1,1,3} + P_2``."""
    parts = sorted(
        (_describe_component(g, c) for c in mask_components(g.neighbor_masks, g.full_mask)),
    )
    return " + ".join(parts) if parts else "empty"
