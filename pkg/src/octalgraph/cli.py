"""Command-line front end.

Exit codes: 0 success, 1 verification failure or closed-form/engine
mismatch, 2 parse or usage error, 3 position cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import closed_form as cf
from . import verification as ver
from .dsl import CycleSpec, PathSpec, format_spec, load_graph_specs, parse_graph_spec, realize
from .engine import DEFAULT_MAX_POSITIONS, GrundyEngine, Outcome
from .errors import ParseError, ResourceLimitError
from .graph import BistarSpec, StarSpec, describe_graph, remove_vertices
from .rules import detect_period, grundy_sequence, parse_code

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class MismatchError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(_usage(f"{self.prog}: error: {message}"))


def _usage(message: str) -> int:
    print(message, file=sys.stderr)
    return EXIT_USAGE


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def _closed_form(code, spec):
    if str(code) != "0.33":
        return None
    if isinstance(spec, PathSpec):
        return cf.path_grundy(spec.n)
    if isinstance(spec, CycleSpec):
        return cf.cycle_grundy(spec.n)
    if isinstance(spec, StarSpec):
        return cf.star_grundy(spec)
    if isinstance(spec, BistarSpec):
        return cf.bistar_grundy(spec)
    return None


def _evaluate(code, spec, engine, force_engine: bool) -> dict:
    closed = _closed_form(code, spec)
    value = closed
    method = "closed-form"
    if closed is None or force_engine:
        value = engine.grundy(realize(spec))
        method = "engine"
        if closed is not None:
            if closed != value:
                raise MismatchError(f"closed form gives {closed} but engine gives {value} for {format_spec(spec)}")
            method = "engine+closed-form"
    return {
        "code": str(code),
        "graph": format_spec(spec),
        "value": value,
        "outcome": Outcome.from_grundy(value).value,
        "method": method,
    }


def _graph_inputs(args) -> list:
    specs = []
    if args.graph:
        specs.append(parse_graph_spec(args.graph))
    if getattr(args, "graph_file", None):
        specs.extend(load_graph_specs(args.graph_file))
    if not specs:
        raise ParseError("no graph given (use --graph or --graph-file)", token="--graph")
    return specs


def cmd_grundy(args, outcome_only=False) -> int:
    code = parse_code(args.code)
    engine = GrundyEngine(code, max_positions=args.max_positions)
    results = [_evaluate(code, spec, engine, args.force_engine) for spec in _graph_inputs(args)]
    if args.json:
        print(json.dumps(results if len(results) > 1 else results[0], sort_keys=True))
        return EXIT_OK
    for r in results:
        prefix = f"{r['graph']}: " if len(results) > 1 else ""
        if outcome_only:
            print(f"{prefix}{r['outcome']}")
        else:
            print(f"{prefix}value {r['value']}, {r['outcome']}-position ({r['method']})")
    return EXIT_OK


def cmd_moves(args) -> int:
    code = parse_code(args.code)
    spec = parse_graph_spec(args.graph)
    g = realize(spec)
    engine = GrundyEngine(code, max_positions=args.max_positions)
    options = engine.option_values(g)
    total = engine.grundy(g)
    winning = []
    for move, value in options:
        if value == 0:
            after = remove_vertices(g, move.removed)
            winning.append({"removed": sorted(move.removed), "clause": move.clause, "result": describe_graph(after)})
    doc = {"code": str(code), "graph": format_spec(spec), "value": total, "winning_moves": winning}
    if not winning:
        text = "none (P-position)"
    else:
        text = "\n".join("{" + ",".join(map(str, m["removed"])) + "} -> " + m["result"] for m in winning)
    _emit(args, doc, text)
    return EXIT_OK


def cmd_star_table(args) -> int:
    if args.rows < 1:
        raise ParseError("--rows must be at least 1", token=str(args.rows))
    rows = cf.star_table(args.rows)
    if args.cols is not None:
        rows = [row[: args.cols] for row in rows]
    width = max(len(r) for r in rows)
    if args.json:
        print(json.dumps({"rows": [list(r) for r in rows]}, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["paths"] + [f"twos={j}" for j in range(width)])
        for k, row in enumerate(rows):
            w.writerow([k] + list(row) + [""] * (width - len(row)))
        sys.stdout.write(buf.getvalue())
    else:
        lines = ["k\\j " + " ".join(f"{j:>2}" for j in range(width))]
        for k, row in enumerate(rows):
            lines.append(f"{k:>3} " + " ".join(f"{v:>2}" for v in row))
        print("\n".join(lines))
    return EXIT_OK


def cmd_sequence(args) -> int:
    code = parse_code(args.code)
    if args.max < 0:
        raise ParseError("--max must be nonnegative", token=str(args.max))
    seq = grundy_sequence(code, args.max)
    period = detect_period(seq) if args.detect_period else None
    doc = {"code": str(code), "values": seq}
    text = ",".join(map(str, seq))
    if args.detect_period:
        doc["period"] = None if period is None else {"preperiod": period[0], "period": period[1]}
        text += "\nperiod: " + ("none found" if period is None else f"preperiod {period[0]}, period {period[1]}")
    _emit(args, doc, text)
    return EXIT_OK


SUITES = ("paths", "stars", "bistars", "counterexample", "caterpillar", "heap-path")


def _run_suite(args):
    engine = GrundyEngine(ver.CODE_033, max_positions=args.max_positions)
    if args.suite == "paths":
        return ver.verify_paths_cycles(args.max if args.max is not None else 30, engine)
    if args.suite == "stars":
        report = ver.verify_star_table(args.max_arms, engine)
        oracle = ver.verify_star_oracle(engine=engine)
        report.cases += oracle.cases
        report.failures += oracle.failures
        report.elapsed_ms += oracle.elapsed_ms
        report.cache_entries = oracle.cache_entries
        return report
    if args.suite == "bistars":
        return ver.verify_bistars(min(args.max_arms, 3), args.max_length, args.max_middle, engine)
    if args.suite == "counterexample":
        return ver.verify_counterexample(engine)
    if args.suite == "caterpillar":
        return ver.verify_caterpillar(engine)
    return ver.verify_heap_path(n_max=args.max if args.max is not None else 20)


def cmd_verify(args) -> int:
    report = _run_suite(args)
    if args.json:
        print(report.to_json(args.timing))
    else:
        print(report.summary(args.timing))
        for key, value in sorted(report.details.items()):
            print(f"  {key}: {value}")
        for f in report.failures[:20]:
            print(f"  FAIL {f['input']}: expected {f['expected']}, got {f['actual']}")
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_search(args) -> int:
    result = ver.search_caterpillars(
        args.spine_max,
        args.target,
        max_positions=args.max_positions,
        max_instances=args.max_instances,
    )
    matches = [{"spec": str(s), "value": v} for s, v in result.matches]
    best = None if result.best is None else {"spec": str(result.best[0]), "value": result.best[1]}
    doc = {"target": args.target, "instances": result.instances, "matches": matches, "best": best,
           "skipped": [str(s) for s, _ in result.skipped]}
    lines = [f"{m['spec']} -> {m['value']}" for m in matches]
    lines.append(f"{len(matches)} match(es) among {result.instances} caterpillars")
    if best:
        lines.append(f"largest value seen: {best['value']} ({best['spec']})")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="octalgraph", description="Octal games on graphs: Grundy values, closed forms, verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, graph=True):
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--max-positions", type=int, default=DEFAULT_MAX_POSITIONS)
        if graph:
            p.add_argument("--code", required=True, help="octal code, e.g. 0.33")
            p.add_argument("--graph", help="graph DSL, e.g. star:1,1,3,4")

    for name in ("grundy", "outcome"):
        p = sub.add_parser(name, help=f"{name} of a position")
        common(p)
        p.add_argument("--graph-file", help="file with one graph spec per line")
        p.add_argument("--force-engine", action="store_true", help="search even when a closed form exists")

    p = sub.add_parser("moves", help="winning moves")
    common(p)

    p = sub.add_parser("star-table", help="star Grundy table for 0.33")
    p.add_argument("--rows", type=int, default=6)
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sequence", help="heap Grundy sequence")
    p.add_argument("--code", required=True)
    p.add_argument("--max", type=int, default=30)
    p.add_argument("--detect-period", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max", type=int, default=None, help="n_max for paths / heap-path")
    p.add_argument("--max-arms", type=int, default=5)
    p.add_argument("--max-length", type=int, default=4)
    p.add_argument("--max-middle", type=int, default=5)
    p.add_argument("--timing", action="store_true", help="include wall time (output is then not reproducible)")
    common(p, graph=False)

    p = sub.add_parser("search", help="search for caterpillars with a given value")
    p.add_argument("family", choices=("caterpillars",))
    p.add_argument("--spine-max", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--max-instances", type=int, default=None)
    p.add_argument("--json", action="store_true", help="structured output")
    p.add_argument("--max-positions", type=int, default=None,
                   help="per-instance cap; instances over it are skipped (default: shared cache, no cap)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command in ("grundy", "outcome"):
            return cmd_grundy(args, outcome_only=args.command == "outcome")
        if args.command == "moves":
            if not args.graph:
                raise ParseError("moves needs --graph", token="--graph")
            return cmd_moves(args)
        if args.command == "star-table":
            return cmd_star_table(args)
        if args.command == "sequence":
            return cmd_sequence(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_search(args)
    except ParseError as exc:
        return _usage(f"error: {exc}")
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except MismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
