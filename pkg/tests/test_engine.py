import pytest
from hypothesis import given
from hypothesis import strategies as st

from octalgraph import (
    EvalCache,
    Graph,
    GrundyEngine,
    InvalidArgumentError,
    OctalCode,
    Outcome,
    ResourceLimitError,
    StarSpec,
    build_cycle,
    build_path,
    grundy,
    mex,
    outcome,
    parse_code,
    realize_star,
    winning_moves,
)
from octalgraph.graph import disjoint_union, remove_vertices
from octalgraph.verification import COUNTEREXAMPLE
from octalgraph import realize_bistar
from oracles import naive_grundy
from strategies import graphs, small_codes, trees

C033 = parse_code("0.33")


def test_mex_examples():
    assert mex([]) == 0
    assert mex({0, 1, 3}) == 2
    assert mex({1, 2}) == 0


class TestExamples:
    def test_values(self):
        assert grundy(build_path(7), C033) == 1
        assert grundy(build_cycle(9), C033) == 0
        assert grundy(realize_star(StarSpec.of(1, 1, 3, 4)), C033) == 1
        assert grundy(Graph(0), parse_code("0.6")) == 0

    def test_outcomes(self):
        assert outcome(build_path(3), C033) is Outcome.P
        assert outcome(Graph(0), parse_code("0.137")) is Outcome.P
        assert outcome(build_path(1), parse_code("0.6")) is Outcome.P
        assert outcome(build_path(1), C033) is Outcome.N

    def test_winning_moves(self):
        assert [sorted(m.removed) for m in winning_moves(build_path(4), C033)] == [[0], [3]]
        assert winning_moves(build_path(3), C033) == []
        assert [sorted(m.removed) for m in winning_moves(build_path(1), C033)] == [[0]]

    def test_counterexample_value(self):
        # 8-vertex tree, checked against whole-position recursion
        g = realize_bistar(COUNTEREXAMPLE)
        assert g.vertex_count == 8
        assert grundy(g, C033) == naive_grundy(g, C033.digits) == 2


class TestAgainstOracle:
    @given(graphs(7), small_codes)
    def test_random_graphs(self, g, digits):
        code = OctalCode(tuple(digits))
        assert GrundyEngine(code).grundy(g) == naive_grundy(g, code.digits)

    @given(trees(max_vertices=11), st.sampled_from(["0.33", "0.6", "0.07", "0.137", "0.77"]))
    def test_random_trees(self, t, code):
        c = parse_code(code)
        assert grundy(t, c) == naive_grundy(t, c.digits)

    @given(graphs(8), small_codes)
    def test_canonical_cache_changes_nothing(self, g, digits):
        code = OctalCode(tuple(digits))
        assert GrundyEngine(code).grundy(g) == GrundyEngine(code, canonical=False).grundy(g)

    @given(graphs(7), small_codes)
    def test_option_values(self, g, digits):
        code = OctalCode(tuple(digits))
        engine = GrundyEngine(code)
        opts = engine.option_values(g)
        for move, value in opts:
            assert value == naive_grundy(remove_vertices(g, move.removed), code.digits)
        assert engine.grundy(g) == mex(v for _, v in opts)


class TestSums:
    @given(st.lists(graphs(6), min_size=1, max_size=3))
    def test_disjoint_sum_is_xor(self, parts):
        x = 0
        for p in parts:
            x ^= grundy(p, C033)
        assert grundy(disjoint_union(*parts), C033) == x

    @given(trees(max_vertices=9))
    def test_mirror_sum_is_zero(self, t):
        assert grundy(disjoint_union(t, t), parse_code("0.137")) == 0


class TestCache:
    def test_shared_cache_across_hosts(self):
        cache = EvalCache(C033)
        engine = GrundyEngine(C033, cache=cache)
        assert engine.grundy(build_path(10)) == 1
        before = len(cache)
        assert engine.grundy(realize_star(StarSpec.of(4, 5))) == 1  # isomorphic to P_10
        assert len(cache) == before
        assert cache.hits > 0
        assert engine.cache_stats()["entries"] == before

    def test_cache_code_must_match(self):
        with pytest.raises(InvalidArgumentError):
            GrundyEngine(C033, cache=EvalCache(parse_code("0.6")))

    def test_conflicting_write_is_caught(self):
        cache = EvalCache(C033)
        cache.put("k", 1)
        cache.put("k", 1)
        with pytest.raises(AssertionError):
            cache.put("k", 2)

    def test_resource_limit(self):
        with pytest.raises(ResourceLimitError) as info:
            GrundyEngine(C033, max_positions=5).grundy(realize_star(StarSpec.of(3, 4, 5)))
        assert info.value.cap == 5

    def test_without_canonical_cache(self):
        engine = GrundyEngine(C033, canonical=False)
        assert engine.grundy(build_path(120)) == 0
        assert engine.cache_stats() == {"entries": 0, "hits": 0, "misses": 0}

    def test_long_path_no_recursion_limit(self):
        assert grundy(build_path(1100), C033) == 2
