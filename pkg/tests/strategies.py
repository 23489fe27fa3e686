from hypothesis import strategies as st

from octalgraph import Graph, StarSpec


@st.composite
def graphs(draw, max_vertices=8, density=None):
    n = draw(st.integers(0, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())] if pairs else []
    return Graph(n, edges)


@st.composite
def trees(draw, min_vertices=1, max_vertices=12):
    n = draw(st.integers(min_vertices, max_vertices))
    edges = [(v, draw(st.integers(0, v - 1))) for v in range(1, n)]
    perm = draw(st.permutations(range(n)))
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def relabel(g, perm):
    return Graph(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges()])


stars = st.lists(st.integers(1, 5), max_size=4).map(lambda arms: StarSpec(tuple(arms)))
small_stars = st.lists(st.integers(1, 3), max_size=3).map(lambda arms: StarSpec(tuple(arms)))
star_or_empty = st.one_of(st.just(StarSpec.empty()), small_stars)
small_codes = st.lists(st.integers(0, 7), min_size=1, max_size=3).filter(lambda d: d[-1] != 0)
