"""Reproduction suites: closed forms and reference values checked against the engine.

Every comparison has the brute-force engine (or the heap recursion) on one
side.  Suites share one insert-only :class:`EvalCache` per code across their
cases; values are deterministic, so sharing only saves time.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Optional

from . import closed_form as cf
from .engine import GrundyEngine, Outcome
from .errors import InvalidArgumentError, ResourceLimitError
from .graph import (
    BistarSpec,
    CaterpillarSpec,
    Graph,
    StarSpec,
    attach_path,
    build_cycle,
    build_path,
    realize_bistar,
    realize_caterpillar,
    realize_star,
)
from .rules import OctalCode, heap_grundy, parse_code

__all__ = [
    "VerificationReport",
    "CODE_033",
    "CATERPILLAR_10",
    "COUNTEREXAMPLE",
    "SIM1_REPRESENTATIVES",
    "SIM2_REPRESENTATIVES",
    "verify_paths_cycles",
    "verify_star_table",
    "verify_star_oracle",
    "verify_s11_family",
    "verify_p3_attachment",
    "verify_bistars",
    "verify_middle_path",
    "verify_counterexample",
    "verify_caterpillar",
    "verify_heap_path",
    "verify_sum_rule",
    "search_caterpillars",
    "oracle_star_specs",
    "bistar_sweep_specs",
    "star_leaves",
]

CODE_033 = parse_code("0.33")

CATERPILLAR_10 = CaterpillarSpec(37, frozenset({2, 4, 6, 8, 10, 12, 14, 18, 20, 22, 24, 26, 28, 30, 34}))

# S_{1,1} -2- S_{1,2}; u is the first vertex of the length-2 arm.
COUNTEREXAMPLE = BistarSpec(StarSpec.of(1, 1), 2, StarSpec.of(1, 2))


def _s(*arms) -> StarSpec:
    return StarSpec(tuple(arms))


_EMPTY = StarSpec.empty()

# Representatives read off the class grids; each is re-classified before use.
SIM1_REPRESENTATIVES = {
    cf.ClassSim1.C0: [_s(1, 1, 1, 1), _EMPTY, _s(1, 1)],
    cf.ClassSim1.C1: [_s(1, 1, 1), _s(1, 1, 2, 2)],
    cf.ClassSim1.C1star: [_s(), _s(1, 2), _s(2, 2, 2)],
    cf.ClassSim1.C2: [_s(2, 2, 2, 2, 2)],
    cf.ClassSim1.C2star: [_s(1), _s(2, 2)],
    cf.ClassSim1.C2box: [_s(1, 1, 2), _s(1, 2, 2, 2)],
    cf.ClassSim1.C3: [_s(1, 2, 2, 2, 2, 2)],
    cf.ClassSim1.C3box: [_s(1, 1, 1, 2), _s(1, 1, 2, 2, 2)],
}

SIM2_REPRESENTATIVES = {
    cf.ClassSim2.D0: [_s(2, 2, 2, 2)],
    cf.ClassSim2.D0star: [_EMPTY, _s(1, 2, 2), _s(1, 1, 1, 1), _s(2)],
    cf.ClassSim2.D1: [_s(1, 2, 2, 2, 2)],
    cf.ClassSim2.D1star: [_s(), _s(1, 2), _s(2, 2, 2)],
    cf.ClassSim2.D1box: [_s(1, 1, 1), _s(1, 1, 2, 2)],
    cf.ClassSim2.D2: [_s(2, 2, 2, 2, 2)],
    cf.ClassSim2.D2star: [_s(1), _s(2, 2)],
    cf.ClassSim2.D2box: [_s(1, 1, 2), _s(1, 2, 2, 2)],
    cf.ClassSim2.D3: [_s(1, 2, 2, 2, 2, 2)],
    cf.ClassSim2.D3box: [_s(1, 1, 1, 2)],
}


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    cache_entries: int = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, case, expected, actual) -> bool:
        self.cases += 1
        if expected != actual:
            self.failures.append({"input": str(case), "expected": expected, "actual": actual})
            return False
        return True

    def to_dict(self, timing: bool = True) -> dict:
        """Report as a plain dict.  ``timing=False`` nulls the wall time so the
        document is identical across runs."""
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else None,
            "cache_entries": self.cache_entries,
            "passed": self.passed,
            **({"details": self.details} if self.details else {}),
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, default=str)

    def summary(self, timing: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        clock = f", {self.elapsed_ms / 1000:.2f}s" if timing else ""
        return f"{self.suite}: {status} ({self.cases} cases, {len(self.failures)} failures{clock})"


class _Timer:
    def __init__(self, report: VerificationReport, engine: Optional[GrundyEngine]):
        self.report = report
        self.engine = engine

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = (time.perf_counter() - self.start) * 1000
        if self.engine is not None and self.engine.cache is not None:
            self.report.cache_entries = len(self.engine.cache)
        return False


def _engine(engine: Optional[GrundyEngine], code: OctalCode = CODE_033) -> GrundyEngine:
    if engine is None:
        return GrundyEngine(code)
    if engine.code != code:
        raise InvalidArgumentError(f"engine is bound to {engine.code}, suite needs {code}")
    return engine


# -- paths and cycles --------------------------------------------------------------


def verify_paths_cycles(n_max: int = 30, engine: Optional[GrundyEngine] = None, cycle_max: Optional[int] = None):
    engine = _engine(engine)
    cycle_max = n_max if cycle_max is None else cycle_max
    report = VerificationReport("paths")
    with _Timer(report, engine):
        for n in range(n_max + 1):
            report.check(f"P_{n}", n % 3, engine.grundy(build_path(n)))
        for n in range(3, cycle_max + 1):
            report.check(f"C_{n}", n % 3, engine.grundy(build_cycle(n)))
    return report


# -- stars --------------------------------------------------------------------------


def oracle_star_specs(max_arms: int = 4, max_length: int = 5) -> list:
    """Every arm-length tuple in ``{0..max_length}^max_arms`` except all zeros.

    A zero entry means "no arm", so several tuples denote the same star; the
    default bounds give 1,295 specs.
    """
    specs = []
    for combo in itertools.product(range(max_length + 1), repeat=max_arms):
        if any(combo):
            specs.append(StarSpec(tuple(a for a in combo if a)))
    return specs


def star_leaves(spec: StarSpec) -> list:
    """Leaf vertex ids of :func:`realize_star` (an isolated centre counts as a leaf)."""
    g = realize_star(spec)
    return [v for v in range(g.vertex_count) if g.degree(v) <= 1]


def verify_star_table(max_arms: int = 5, engine: Optional[GrundyEngine] = None, pattern_rows: int = 12):
    """Reference rows, periodic row shapes, and engine values of reduced stars."""
    engine = _engine(engine)
    report = VerificationReport("stars")
    with _Timer(report, engine):
        for k, row in cf.STAR_REFERENCE_ROWS.items():
            table_row = cf.star_table_row(k)
            for j, expected in enumerate(row):
                report.check(f"reference(k={k}, j={j})", expected, table_row[j])
        for k in range(6, pattern_rows + 1):
            report.check(f"row {k} pattern", True, cf.row_matches_pattern(k, cf.star_table_row(k)))
        report.check("empty", 0, engine.grundy(Graph(0)))
        for k in range(max_arms + 1):
            for j in range(k + 1):
                spec = StarSpec((1,) * (k - j) + (2,) * j)
                report.check(spec, engine.grundy(realize_star(spec)), cf.star_grundy(spec))
    return report


def verify_star_oracle(max_arms: int = 4, max_length: int = 5, engine: Optional[GrundyEngine] = None):
    engine = _engine(engine)
    report = VerificationReport("star-oracle")
    with _Timer(report, engine):
        for spec in oracle_star_specs(max_arms, max_length):
            report.check(spec, engine.grundy(realize_star(spec)), cf.star_grundy(spec))
    return report


def verify_s11_family(l_max: int = 15, engine: Optional[GrundyEngine] = None):
    engine = _engine(engine)
    report = VerificationReport("s11-family")
    with _Timer(report, engine):
        for ell in range(l_max + 1):
            spec = StarSpec((1, 1, ell) if ell else (1, 1))
            report.check(f"{spec} closed form", ell % 3, cf.star_grundy(spec))
            report.check(f"{spec} engine", ell % 3, engine.grundy(realize_star(spec)))
    return report


def verify_p3_attachment(specs=None, engine: Optional[GrundyEngine] = None):
    """Hanging a P_3 on the centre or on any leaf never changes a star's value."""
    engine = _engine(engine)
    specs = oracle_star_specs() if specs is None else specs
    report = VerificationReport("p3-attachment")
    seen = set()
    with _Timer(report, engine):
        for spec in specs:
            if spec in seen:
                continue
            seen.add(spec)
            g = realize_star(spec)
            base = engine.grundy(g)
            for v in sorted({0, *star_leaves(spec)}):
                report.check(f"{spec} + P_3 at {v}", base, engine.grundy(attach_path(g, v, 3)))
    return report


# -- bistars --------------------------------------------------------------------------


def _sides(max_arms: int, max_length: int) -> list:
    sides = [StarSpec.empty()]
    for k in range(max_arms + 1):
        for arms in itertools.combinations_with_replacement(range(1, max_length + 1), k):
            sides.append(StarSpec(arms))
    return sides


def bistar_sweep_specs(max_arms: int = 3, max_length: int = 4, max_middle: int = 5) -> list:
    sides = _sides(max_arms, max_length)
    return [BistarSpec(a, m, b) for a in sides for b in sides for m in range(max_middle + 1)]


def _check_representatives(report, reps, classify):
    for label, stars in reps.items():
        for s in stars:
            report.check(f"class of {s}", label, classify(s))


def verify_bistars(
    max_arms: int = 3,
    max_length: int = 4,
    max_middle: int = 5,
    engine: Optional[GrundyEngine] = None,
):
    """Exhaustive closed-form vs engine sweep plus one check per product-table cell."""
    engine = _engine(engine)
    report = VerificationReport("bistars")
    with _Timer(report, engine):
        for spec in bistar_sweep_specs(max_arms, max_length, max_middle):
            report.check(spec, engine.grundy(realize_bistar(spec)), cf.bistar_grundy(spec))

        _check_representatives(report, SIM1_REPRESENTATIVES, cf.classify_sim1)
        _check_representatives(report, SIM2_REPRESENTATIVES, cf.classify_sim2)
        covered1, covered2 = set(), set()
        for middle, reps, lookup, covered in (
            (1, SIM1_REPRESENTATIVES, cf.table1_lookup, covered1),
            (2, SIM2_REPRESENTATIVES, cf.table2_lookup, covered2),
        ):
            for (ca, left_list), (cb, right_list) in itertools.product(reps.items(), repeat=2):
                for left, right in itertools.product(left_list, right_list):
                    spec = BistarSpec(left, middle, right)
                    expected = lookup(ca, cb, cf.star_grundy(left), cf.star_grundy(right))
                    if report.check(f"cell({ca.value},{cb.value}) {spec}", expected, engine.grundy(realize_bistar(spec))):
                        covered.add((ca, cb))
        report.details["table1_cells"] = len(covered1)
        report.details["table2_cells"] = len(covered2)
        report.check("join-1 table coverage", 64, len(covered1))
        report.check("join-2 table coverage", 100, len(covered2))
    return report


def verify_middle_path(samples: int = 200, seed: int = 0, engine: Optional[GrundyEngine] = None):
    """Lengthening the middle path by three edges keeps the value (both sides present)."""
    engine = _engine(engine)
    rng = random.Random(seed)
    sides = [s for s in _sides(3, 4) if s.present]
    report = VerificationReport("middle-path")
    with _Timer(report, engine):
        for _ in range(samples):
            spec = BistarSpec(rng.choice(sides), rng.randrange(6), rng.choice(sides))
            longer = BistarSpec(spec.left, spec.middle_edges + 3, spec.right)
            report.check(f"{spec} vs m+3", engine.grundy(realize_bistar(spec)), engine.grundy(realize_bistar(longer)))
    return report


def counterexample_graphs() -> dict:
    """The base bistar, the tree with P_3 hung on u, and P_3 hung on either centre."""
    base = realize_bistar(COUNTEREXAMPLE)
    # Layout: left centre 0, leaves 1-2, middle 3, right centre 4,
    # then the right arms in sorted order: leaf 5, then u=6 and its leaf 7.
    u = 6
    return {
        "base": base,
        "u": u,
        "with_p3_at_u": attach_path(base, u, 3),
        "with_p3_at_left_centre": attach_path(base, 0, 3),
        "with_p3_at_right_centre": attach_path(base, 4, 3),
    }


def verify_counterexample(engine: Optional[GrundyEngine] = None):
    engine = _engine(engine)
    graphs = counterexample_graphs()
    report = VerificationReport("counterexample")
    with _Timer(report, engine):
        base_value = engine.grundy(graphs["base"])
        report.check("base bistar outcome", Outcome.N.value, Outcome.from_grundy(base_value).value)
        report.check("base vertex count", 8, graphs["base"].vertex_count)
        report.check("u is on the length-2 arm", {4, 7}, set(graphs["base"].neighbors(graphs["u"])))
        after = engine.grundy(graphs["with_p3_at_u"])
        report.check("P_3 at u outcome", Outcome.P.value, Outcome.from_grundy(after).value)
        report.check("P_3 at u vertex count", 11, graphs["with_p3_at_u"].vertex_count)
        for name in ("with_p3_at_left_centre", "with_p3_at_right_centre"):
            report.check(name, base_value, engine.grundy(graphs[name]))
        report.details["base_value"] = base_value
        report.details["with_p3_at_u_value"] = after
    return report


def verify_caterpillar(engine: Optional[GrundyEngine] = None, spec: CaterpillarSpec = CATERPILLAR_10, expected: int = 10):
    engine = _engine(engine)
    report = VerificationReport("caterpillar")
    with _Timer(report, engine):
        g = realize_caterpillar(spec)
        report.check("vertex count", spec.spine_length + len(spec.leg_positions), g.vertex_count)
        value = engine.grundy(g)
        report.check(str(spec), expected, value)
        report.details["value"] = value
        report.details["vertices"] = g.vertex_count
    return report


def verify_heap_path(codes=("0.3", "0.33", "0.6", "0.07", "0.137"), n_max: int = 20):
    """Heap recursion vs the graph engine on P_n, per code."""
    report = VerificationReport("heap-path")
    with _Timer(report, None):
        for text in codes:
            code = parse_code(text) if isinstance(text, str) else text
            engine = GrundyEngine(code)
            seq: list = []
            for n in range(n_max + 1):
                report.check(f"{code} n={n}", heap_grundy(code, n, seq), engine.grundy(build_path(n)))
    return report


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph(n, [(v, rng.randrange(v)) for v in range(1, n)])


def verify_sum_rule(samples: int = 200, max_vertices: int = 18, seed: int = 0, engine: Optional[GrundyEngine] = None):
    """Forest value equals the XOR of its trees, and T + T is always 0."""
    from .graph import disjoint_union

    engine = _engine(engine)
    rng = random.Random(seed)
    report = VerificationReport("sum-rule")
    with _Timer(report, engine):
        for _ in range(samples):
            total = rng.randint(1, max_vertices)
            sizes = []
            while total:
                s = rng.randint(1, total)
                sizes.append(s)
                total -= s
            trees = [random_tree(rng, s) for s in sizes]
            forest = disjoint_union(*trees)
            xor = 0
            for t in trees:
                xor ^= GrundyEngine(CODE_033).grundy(t)
            report.check(f"forest {sizes}", xor, engine.grundy(forest))
            t = trees[0] if 2 * trees[0].vertex_count <= max_vertices else random_tree(rng, max_vertices // 2)
            report.check("T + T", 0, engine.grundy(disjoint_union(t, t)))
    return report


# -- caterpillar search --------------------------------------------------------------


@dataclass
class CaterpillarSearch:
    target: int
    matches: list = field(default_factory=list)
    best: Optional[tuple] = None
    instances: int = 0
    skipped: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.matches)

    def __len__(self):
        return len(self.matches)


def _caterpillars(spine_max: int):
    for spine in range(1, spine_max + 1):
        interior = list(range(1, spine - 1))
        for r in range(len(interior) + 1):
            for legs in itertools.combinations(interior, r):
                spec = CaterpillarSpec(spine, frozenset(legs))
                mirror = spec.mirrored()
                if sorted(mirror.leg_positions) < sorted(spec.leg_positions):
                    continue
                yield spec


def search_caterpillars(
    spine_max: int,
    target: int,
    engine: Optional[GrundyEngine] = None,
    max_positions: Optional[int] = None,
    max_instances: Optional[int] = None,
) -> CaterpillarSearch:
    """Enumerate caterpillars (legs on interior spine vertices, mirror images once).

    Instances that blow the position cap are recorded in ``skipped``.
    """
    engine = _engine(engine)
    result = CaterpillarSearch(target)
    for spec in _caterpillars(spine_max):
        if max_instances is not None and result.instances >= max_instances:
            break
        result.instances += 1
        try:
            if max_positions is not None:
                value = GrundyEngine(CODE_033, max_positions=max_positions).grundy(realize_caterpillar(spec))
            else:
                value = engine.grundy(realize_caterpillar(spec))
        except ResourceLimitError as exc:
            result.skipped.append((spec, str(exc)))
            continue
        if result.best is None or value > result.best[1]:
            result.best = (spec, value)
        if value == target:
            result.matches.append((spec, value))
    return result

