import json

import pytest

from octalgraph import CaterpillarSpec, GrundyEngine, StarSpec, parse_code, realize_caterpillar
from octalgraph import closed_form as cf
from octalgraph import verification as ver
from octalgraph.graph import build_path
from octalgraph.canonical import canonical_key


class TestReport:
    def test_fields_and_json(self):
        report = ver.verify_paths_cycles(0)
        doc = json.loads(report.to_json())
        assert set(doc) >= {"suite", "cases", "failures", "elapsed_ms", "cache_entries"}
        assert doc["cases"] == 1 and doc["failures"] == [] and doc["passed"]

    def test_failure_is_recorded(self):
        report = ver.VerificationReport("demo")
        assert report.check("a", 1, 1)
        assert not report.check("b", 1, 2)
        assert not report.passed
        assert report.failures == [{"input": "b", "expected": 1, "actual": 2}]
        assert "FAIL" in report.summary()

    def test_untimed_output_is_reproducible(self):
        a = ver.verify_counterexample().to_json(timing=False)
        b = ver.verify_counterexample().to_json(timing=False)
        assert a == b
        assert json.loads(a)["elapsed_ms"] is None


class TestSuites:
    def test_paths(self):
        report = ver.verify_paths_cycles(30)
        assert report.passed and report.cases == 31 + 28

    def test_star_table(self):
        report = ver.verify_star_table(max_arms=5)
        assert report.passed, report.failures

    def test_star_table_spot_entries(self):
        for arms, value in [((1, 1, 2, 2), 1), ((1, 2, 2, 2), 2), ((1, 1, 2, 2, 2), 3)]:
            assert cf.star_grundy(StarSpec(arms)) == value

    def test_oracle_spec_count(self):
        assert len(ver.oracle_star_specs()) == 6 ** 4 - 1

    def test_s11_family(self):
        assert ver.verify_s11_family(9).passed

    def test_p3_attachment_small(self):
        specs = ver.oracle_star_specs(3, 3)
        report = ver.verify_p3_attachment(specs)
        assert report.passed and report.cases > len(set(specs))

    def test_bistars_small_bounds_still_cover_tables(self):
        report = ver.verify_bistars(max_arms=1, max_length=2, max_middle=3)
        assert report.passed, report.failures[:3]
        assert report.details == {"table1_cells": 64, "table2_cells": 100}

    def test_representatives_classify(self):
        for label, stars in ver.SIM1_REPRESENTATIVES.items():
            assert all(cf.classify_sim1(s) is label for s in stars)
        for label, stars in ver.SIM2_REPRESENTATIVES.items():
            assert all(cf.classify_sim2(s) is label for s in stars)
        assert set(ver.SIM1_REPRESENTATIVES) == set(cf.ClassSim1)
        assert set(ver.SIM2_REPRESENTATIVES) == set(cf.ClassSim2)

    def test_middle_path(self):
        assert ver.verify_middle_path(40, seed=3).passed

    def test_counterexample(self):
        report = ver.verify_counterexample()
        assert report.passed
        assert report.details == {"base_value": 2, "with_p3_at_u_value": 0}

    def test_heap_path(self):
        report = ver.verify_heap_path()
        assert report.passed and report.cases == 5 * 21

    def test_sum_rule(self):
        assert ver.verify_sum_rule(40, 14, seed=1).passed

    def test_caterpillar_suite_on_small_instance(self):
        report = ver.verify_caterpillar(spec=CaterpillarSpec(37), expected=1)
        assert report.passed and report.details["vertices"] == 37

    def test_caterpillar_shape(self):
        g = realize_caterpillar(ver.CATERPILLAR_10)
        assert g.vertex_count == 52
        mirror = realize_caterpillar(ver.CATERPILLAR_10.mirrored())
        assert canonical_key(g) == canonical_key(mirror)

    def test_engine_code_mismatch(self):
        with pytest.raises(ValueError):
            ver.verify_paths_cycles(3, GrundyEngine(parse_code("0.6")))

    def test_suites_are_deterministic(self):
        a = ver.verify_sum_rule(20, 12, seed=5)
        b = ver.verify_sum_rule(20, 12, seed=5)
        assert a.to_dict(timing=False) == b.to_dict(timing=False)


class TestSearch:
    def test_target_three(self):
        result = ver.search_caterpillars(8, 3)
        assert len(result) > 0
        assert all(v == 3 for _, v in result)
        assert result.best[1] >= 3

    def test_target_zero_includes_p3(self):
        result = ver.search_caterpillars(3, 0)
        keys = {canonical_key(realize_caterpillar(s)) for s, _ in result}
        assert canonical_key(build_path(3)) in keys

    def test_mirror_images_enumerated_once(self):
        specs = list(ver._caterpillars(7))
        names = {str(s) for s in specs}
        assert len(names) == len(specs)
        for s in specs:
            m = s.mirrored()
            assert m == s or str(m) not in names
        assert ver.search_caterpillars(7, -1).instances == len(specs)

    def test_instances_over_cap_are_skipped(self):
        result = ver.search_caterpillars(6, 3, max_positions=20)
        assert result.skipped
        assert result.instances == len(list(ver._caterpillars(6)))
