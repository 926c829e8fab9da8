"""Command line front end: gen, run, predict, verify, bench.

Diagnostics go to stderr; data goes to the output file or stdout.  Exit
status is zero iff nothing failed.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from .bench import parse_plan, records_to_csv, run_plan
from .core import (
    PHASE_LOAD_RULES,
    PHASE_READ_DATA,
    PHASE_WRITE_RES,
    EngineKind,
    Family,
    GraphSpec,
    InvalidSpecError,
    Variant,
)
from .engines import run_engine, solve_minincrement, solve_seminaive
from .fileformats import FactFormat, ParseError, read_edges, write_edges, write_paths
from .formulas import PREDICTION_CSV_HEADER, predict, prediction_csv_row
from .graphs import edge_count, generate
from .oracles import count_combinations_oracle, reachability_oracle

_FAMILY_BY_NAME = {f.value.lower(): f for f in Family}


def _spec_from_args(args: argparse.Namespace) -> GraphSpec:
    family = _FAMILY_BY_NAME[args.family]
    spec = GraphSpec(family, n=args.n, k=args.k, h=args.h)
    violation = spec.validate()
    if violation is not None:
        raise InvalidSpecError(violation)
    return spec


def _write_out(data: bytes, out: str) -> None:
    if out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(out).write_bytes(data)


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    edges = generate(spec)
    _write_out(write_edges(edges, FactFormat(args.format)), args.out)
    stream = sys.stderr if args.out == "-" else sys.stdout
    print(f"{len(edges)} edges", file=stream)
    return 0


def _cmd_run(args: argparse.Namespace) -> int:
    fmt = FactFormat(args.format)
    t0 = time.perf_counter()
    edges = read_edges(Path(args.edges).read_bytes(), fmt)
    read_ms = (time.perf_counter() - t0) * 1e3
    result = run_engine(EngineKind(args.engine), edges, Variant(args.variant))
    t0 = time.perf_counter()
    _write_out(write_paths(result.paths, fmt), args.out)
    write_ms = (time.perf_counter() - t0) * 1e3

    ins = result.instrumentation
    times = {PHASE_LOAD_RULES: 0.0, PHASE_READ_DATA: read_ms}
    times.update(result.phase_times)
    times[PHASE_WRITE_RES] = write_ms
    summary = " ".join(
        [
            f"paths={len(result.paths)}",
            f"rec_firings={ins.rec_firings}",
            f"base_firings={ins.base_firings}",
            f"probes={ins.probes}",
            f"iterations={ins.iterations}",
            f"duplicate_derivations={ins.duplicate_derivations}",
            f"tables_created={ins.tables_created}",
        ]
        + [f"{phase}={ms:.3f}ms" for phase, ms in times.items()]
    )
    print(summary, file=sys.stderr if args.out == "-" else sys.stdout)
    return 0


def _cmd_predict(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    print(PREDICTION_CSV_HEADER)
    print(prediction_csv_row(spec))
    return 0


def _fail(message: str) -> int:
    print(f"FAIL {message}", file=sys.stderr)
    return 1


def _verify_family(spec: GraphSpec) -> int:
    edges = generate(spec)
    expected_edges = edge_count(spec)
    if len(edges) != expected_edges:
        return _fail(
            f"{spec.label()} edge count: expected {expected_edges}, got {len(edges)}"
        )
    paths = reachability_oracle(edges)
    pred = predict(spec)
    if len(paths) != pred.paths:
        return _fail(f"{spec.label()} paths: expected {pred.paths}, got {len(paths)}")
    by_variant = {
        Variant.LEFT: pred.combos_left,
        Variant.RIGHT: pred.combos_right,
        Variant.DOUBLE: pred.combos_double,
    }
    for variant, expected in by_variant.items():
        measured = count_combinations_oracle(edges, variant)
        if measured != expected:
            return _fail(
                f"{spec.label()} {variant} combinations: expected {expected}, "
                f"got {measured}"
            )
        for engine in EngineKind:
            result = run_engine(engine, edges, variant)
            if result.paths != paths:
                return _fail(
                    f"{spec.label()} {variant} {engine}: path set differs from "
                    f"oracle ({len(result.paths)} vs {len(paths)})"
                )
        for solver in (solve_minincrement, solve_seminaive):
            got = solver(edges, variant).instrumentation.rec_firings
            if got != expected:
                return _fail(
                    f"{spec.label()} {variant} {solver.__name__}: rec_firings "
                    f"expected {expected}, got {got}"
                )
    print("PASS")
    return 0


def _verify_random(count: int, max_n: int, seed: int) -> int:
    rng = random.Random(seed)
    for trial in range(count):
        n = rng.randint(1, max_n)
        p = rng.choice((0.1, 0.25, 0.5))
        # Directed G(n, p) in the standard sense: ordered pairs of distinct
        # vertices, each kept with probability p (no self-loops).
        edges = frozenset(
            (a, b)
            for a in range(1, n + 1)
            for b in range(1, n + 1)
            if a != b and rng.random() < p
        )
        label = f"trial {trial} (n={n}, p={p}, {len(edges)} edges)"
        paths = reachability_oracle(edges)
        for variant in Variant:
            counts = []
            for engine in EngineKind:
                result = run_engine(engine, edges, variant)
                if result.paths != paths:
                    return _fail(
                        f"{label} {variant} {engine}: path set differs from oracle "
                        f"({len(result.paths)} vs {len(paths)})"
                    )
                if engine in (EngineKind.SEMINAIVE, EngineKind.MININCREMENT):
                    counts.append(result.instrumentation.rec_firings)
            if counts[0] != counts[1]:
                return _fail(
                    f"{label} {variant}: seminaive fired {counts[0]} but "
                    f"minincrement fired {counts[1]}"
                )
        left = count_combinations_oracle(edges, Variant.LEFT)
        right = count_combinations_oracle(edges, Variant.RIGHT)
        if left != right:
            return _fail(f"{label}: left {left} != right {right} combinations")
    print("PASS")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.random is not None:
        return _verify_random(args.random, args.max_n, args.seed)
    if args.family is None:
        print("verify wants a family or --random N", file=sys.stderr)
        return 2
    return _verify_family(_spec_from_args(args))


def _cmd_bench(args: argparse.Namespace) -> int:
    plan = parse_plan(Path(args.plan).read_text())
    records = run_plan(plan)
    csv = records_to_csv(records)
    if args.out == "-":
        sys.stdout.write(csv)
    else:
        Path(args.out).write_text(csv)
        print(f"{len(records)} records", file=sys.stderr)
    return 0


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--h", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="closurelab",
        description="Instrumented transitive-closure engines over structured graph families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    families = sorted(_FAMILY_BY_NAME)
    formats = [f.value for f in FactFormat]

    p = sub.add_parser("gen", help="generate a family instance as a fact file")
    p.add_argument("family", choices=families)
    _add_param_flags(p)
    p.add_argument("--format", choices=formats, default="tsv")
    p.add_argument("--out", default="-", help="output path, - for stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("run", help="run one engine over an edge-fact file")
    p.add_argument("--engine", choices=[e.value for e in EngineKind], required=True)
    p.add_argument("--variant", choices=[v.value for v in Variant], required=True)
    p.add_argument("--edges", required=True, help="edge-fact file to read")
    p.add_argument("--format", choices=formats, default="tsv")
    p.add_argument("--out", default="-", help="path-fact output, - for stdout")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("predict", help="print closed-form counts for an instance")
    p.add_argument("family", choices=families)
    _add_param_flags(p)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("verify", help="check engines and closed forms against the oracle")
    p.add_argument("family", nargs="?", choices=families)
    _add_param_flags(p)
    p.add_argument("--random", type=int, default=None, metavar="COUNT")
    p.add_argument("--max-n", type=int, default=25)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="run a plan file, emit the CSV report")
    p.add_argument("plan")
    p.add_argument("--out", default="-", help="CSV path, - for stdout")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidSpecError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
