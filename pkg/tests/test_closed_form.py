import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octalgraph import (
    BistarSpec,
    GrundyEngine,
    InvalidArgumentError,
    StarSpec,
    bistar_grundy,
    build_path,
    cycle_grundy,
    parse_code,
    path_grundy,
    realize_bistar,
    realize_star,
    star_grundy,
    star_table,
)
from octalgraph import closed_form as cf
from octalgraph.closed_form import ClassSim1 as C
from octalgraph.closed_form import ClassSim2 as D
from octalgraph.closed_form import ReducedStar
from strategies import small_stars, star_or_empty, stars

ENGINE = GrundyEngine(parse_code("0.33"))
S = StarSpec.of
EMPTY = StarSpec.empty()


def engine_star(spec):
    return ENGINE.grundy(realize_star(spec))


def engine_bistar(spec):
    return ENGINE.grundy(realize_bistar(spec))


class TestPathsCycles:
    def test_examples(self):
        assert path_grundy(0) == 0
        assert path_grundy(7) == 1
        assert cycle_grundy(5) == 2
        with pytest.raises(InvalidArgumentError):
            cycle_grundy(2)
        with pytest.raises(InvalidArgumentError):
            path_grundy(-1)


class TestStars:
    def test_reduction_examples(self):
        assert cf.reduce_star(S(1, 1, 3, 4)) == ReducedStar("star", ones=3, twos=0)
        assert cf.reduce_star(S(3)) == ReducedStar("path", size=1)
        assert cf.reduce_star(S(2, 5)) == ReducedStar("path", size=5)
        assert cf.reduce_star(EMPTY) == ReducedStar("empty")
        assert engine_star(S(2, 5)) == engine_star(S(2, 2)) == 2

    def test_value_examples(self):
        assert star_grundy(S(1, 1, 2)) == 2
        assert star_grundy(S(1, 1, 1, 2)) == 3
        assert star_grundy(S(2, 2, 2, 2)) == 0
        assert star_grundy(S(1, 1, 3, 4)) == 1
        assert star_grundy(EMPTY) == 0

    def test_reference_rows(self):
        # 21 hand-entered reference values, rows 0..5
        table = star_table(6)
        assert sum(len(r) for r in cf.STAR_REFERENCE_ROWS.values()) == 21
        for k, row in cf.STAR_REFERENCE_ROWS.items():
            assert table[k] == row

    def test_row_patterns(self):
        for k, row in enumerate(star_table(13)):
            if k >= 4:
                assert cf.row_matches_pattern(k, row), (k, row)
        assert not cf.row_matches_pattern(4, (0, 3, 1, 2, 1))

    def test_grid_shape(self):
        assert all(len(row) == k + 1 for k, row in enumerate(star_table(10)))
        with pytest.raises(InvalidArgumentError):
            cf.star_table_row(-1)

    def test_table_against_engine(self):
        for k in range(7):
            for j in range(k + 1):
                spec = StarSpec((1,) * (k - j) + (2,) * j)
                assert cf.star_table_row(k)[j] == engine_star(spec), spec

    @given(stars)
    def test_star_matches_engine(self, spec):
        assert star_grundy(spec) == engine_star(spec)

    @given(small_stars)
    def test_arm_shift_by_three(self, spec):
        if not spec.arms:
            return
        arms = list(spec.arms)
        arms[0] += 3
        assert engine_star(StarSpec(tuple(arms))) == engine_star(spec)


class TestClasses:
    def test_sim1_examples(self):
        assert cf.classify_sim1(S(2, 1)) is C.C1star
        assert cf.classify_sim1(S(1, 1, 2)) is C.C2box
        assert cf.classify_sim1(S(1, 1, 1, 1)) is C.C0
        assert cf.classify_sim1(EMPTY) is C.C0
        assert cf.classify_sim1(S(2, 2, 2)) is C.C1star
        assert cf.classify_sim1(S(1, 1, 1, 2)) is C.C3box

    def test_sim2_examples(self):
        assert cf.classify_sim2(S(1, 1, 1)) is D.D1box
        assert cf.classify_sim2(S(1, 2, 2)) is D.D0star
        assert cf.classify_sim2(S(2, 2, 2, 2)) is D.D0
        assert cf.classify_sim2(EMPTY) is D.D0star
        assert cf.classify_sim2(S(2)) is D.D0star
        assert cf.classify_sim2(S(1, 1, 1, 2)) is D.D3box

    def test_class_value_matches_star_value(self):
        for k in range(8):
            for j in range(k + 1):
                spec = StarSpec((1,) * (k - j) + (2,) * j)
                g = star_grundy(spec)
                assert cf.class_value(cf.classify_sim1(spec)) == g
                assert cf.class_value(cf.classify_sim2(spec)) == g

    @given(stars)
    def test_classification_ignores_multiples_of_three(self, spec):
        bumped = StarSpec(tuple(a + 3 for a in spec.arms))
        assert cf.classify_sim1(bumped) is cf.classify_sim1(spec)
        assert cf.classify_sim2(bumped) is cf.classify_sim2(spec)


class TestTables:
    def test_table1_examples(self):
        assert cf.table1_lookup(C.C1star, C.C1star, 1, 1) == 2
        assert cf.table1_lookup(C.C0, C.C3, 0, 3) == 3
        assert cf.table1_lookup(C.C3box, C.C2star, 3, 2) == 0

    def test_table2_examples(self):
        assert cf.table2_lookup(D.D1star, D.D1star, 1, 1) == 0
        assert cf.table2_lookup(D.D0star, D.D1box, 0, 1) == 0
        assert cf.table2_lookup(D.D2star, D.D3, 2, 3) == 3
        assert cf.table2_cell(D.D2box, D.D2box) == "0"
        assert cf.table2_cell(D.D2box, D.D3box) == "1"
        assert cf.table2_cell(D.D3box, D.D3box) == "0"

    def test_tables_are_symmetric_and_complete(self):
        assert len(cf.TABLE1) == 64 and len(cf.TABLE2) == 100
        for a in C:
            for b in C:
                assert cf.table1_cell(a, b) == cf.table1_cell(b, a)
        for a in D:
            for b in D:
                assert cf.table2_cell(a, b) == cf.table2_cell(b, a)


class TestBistars:
    def test_examples(self):
        assert bistar_grundy(BistarSpec(S(1, 1), 2, S(1, 2))) == 2
        assert bistar_grundy(BistarSpec(S(1, 1, 2), 1, StarSpec())) == 3 == star_grundy(S(1, 1, 1, 2))
        assert bistar_grundy(BistarSpec(EMPTY, 4, S(1, 1, 1))) == 1 == engine_bistar(BistarSpec(EMPTY, 4, S(1, 1, 1)))
        assert bistar_grundy(BistarSpec(S(1), 1, S(1, 1, 2))) == 1  # P_2 -1- S_{1,1,2}
        assert bistar_grundy(BistarSpec(S(1, 1, 2), 2, S(1, 1, 2))) == 0

    def test_absent_side_is_not_periodic_from_zero(self):
        # with one side absent, m = 0 and m = 3 give different graphs
        assert realize_bistar(BistarSpec(EMPTY, 3, StarSpec())) == build_path(3)
        assert bistar_grundy(BistarSpec(EMPTY, 3, StarSpec())) == 0
        assert bistar_grundy(BistarSpec(EMPTY, 0, StarSpec())) == 1

    @given(star_or_empty, st.integers(0, 5), star_or_empty)
    def test_matches_engine(self, left, m, right):
        spec = BistarSpec(left, m, right)
        assert bistar_grundy(spec) == engine_bistar(spec)

    @given(small_stars, st.integers(1, 2), small_stars)
    def test_middle_shift_by_three(self, left, m, right):
        a = engine_bistar(BistarSpec(left, m, right))
        assert engine_bistar(BistarSpec(left, m + 3, right)) == a

    @given(star_or_empty, st.integers(0, 5), star_or_empty)
    def test_orientation(self, left, m, right):
        assert bistar_grundy(BistarSpec(left, m, right)) == bistar_grundy(BistarSpec(right, m, left))
