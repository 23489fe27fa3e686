"""Canonical position keys.

Trees get an AHU-style encoding: the tree is rooted at its centre (or at its
central edge) and every vertex is written as a balanced-parenthesis string of
its sorted child strings.  Isomorphic trees produce identical strings and
non-isomorphic ones never collide.  Components containing a cycle fall back to
an exact labelled encoding, which is sound but does not merge isomorphic
copies.
"""

from __future__ import annotations

from .graph import Graph, iter_bits, mask_components

__all__ = ["canonical_key", "component_key", "tree_code", "is_tree_mask"]


def is_tree_mask(nbr: tuple, mask: int) -> bool:
    """True when the subgraph induced by a *connected* ``mask`` has no cycle."""
    twice_edges = 0
    for v in iter_bits(mask):
        twice_edges += (nbr[v] & mask).bit_count()
    return twice_edges == 2 * (mask.bit_count() - 1)


def _rooted_code(adj: dict, root: int, parent: int) -> str:
    order = [root]
    parents = {root: parent}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in adj[v]:
            if u != parents[v]:
                parents[u] = v
                order.append(u)
    codes = {}
    children: dict = {}
    for v in reversed(order):
        kids = children.pop(v, None)
        if kids:
            kids.sort()
            code = "(" + "".join(kids) + ")"
        else:
            code = "()"
        codes[v] = code
        if v != root:
            children.setdefault(parents[v], []).append(code)
    return codes[root]


def tree_code(nbr: tuple, mask: int) -> str:
    """Canonical string of the tree induced by ``mask`` (must be connected and acyclic)."""
    n = mask.bit_count()
    if n == 1:
        return "()"
    if n == 2:
        return "[()()]"
    adj = {v: list(iter_bits(nbr[v] & mask)) for v in iter_bits(mask)}
    deg = {v: len(a) for v, a in adj.items()}
    layer = [v for v, d in deg.items() if d == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
        for v in layer:
            for u in adj[v]:
                if deg[u] > 0:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    if len(layer) == 1:
        return _rooted_code(adj, layer[0], -1)
    a, b = layer
    left = _rooted_code(adj, a, b)
    right = _rooted_code(adj, b, a)
    if right < left:
        left, right = right, left
    return "[" + left + right + "]"


def _labelled_code(nbr: tuple, mask: int) -> str:
    verts = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    edges = sorted(
        (index[u], index[w]) for u in verts for w in iter_bits(nbr[u] & mask) if u < w
    )
    return f"<{len(verts)}:" + ",".join(f"{u}-{w}" for u, w in edges) + ">"


def component_key(nbr: tuple, mask: int, tree=None) -> str:
    """Key of one connected component; ``tree`` skips the acyclicity test when known."""
    if tree is None:
        tree = is_tree_mask(nbr, mask)
    return tree_code(nbr, mask) if tree else _labelled_code(nbr, mask)


def canonical_key(g: Graph) -> bytes:
    """Deterministic position key of a whole graph.

    Forests: ``F`` followed by the sorted tree codes.  Anything with a cycle:
    ``G`` followed by the labelled encoding of the full graph.
    """
    nbr = g.neighbor_masks
    comps = mask_components(nbr, g.full_mask)
    if all(is_tree_mask(nbr, c) for c in comps):
        return ("F" + ".".join(sorted(tree_code(nbr, c) for c in comps))).encode("ascii")
    return ("G" + _labelled_code(nbr, g.full_mask)).encode("ascii")
