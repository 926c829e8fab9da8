"""Benchmark harness: runs (graph, variant, engine) entries through the
full file-in/file-out cycle and reports per-phase times plus counters as
CSV rows.

Phases are LoadRules, ReadData, Query (or Ground and Solve for the ground
engine), WriteRes.  Rules are built into the engines, so LoadRules is
always reported as 0; the CSV carries a comment line saying so.  Every
entry gets one untimed warmup cycle, then `repeats` timed cycles whose
mean and standard deviation land in time_ms/time_sd.  Counters are
deterministic per entry, so any cycle's values serve.
"""

from __future__ import annotations

import statistics
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .core import (
    PHASE_GROUND,
    PHASE_LOAD_RULES,
    PHASE_QUERY,
    PHASE_READ_DATA,
    PHASE_SOLVE,
    PHASE_WRITE_RES,
    EngineKind,
    EvalResult,
    Family,
    GraphSpec,
    InvalidSpecError,
    Variant,
)
from .engines import run_engine
from .fileformats import FactFormat, read_edges, write_edges, write_paths
from .graphs import generate

CSV_COMMENT = "# LoadRules is always 0: the rules are built in, no rule file is consulted."
CSV_HEADER = (
    "family,n,k,h,variant,engine,phase,time_ms,time_sd,"
    "rec_firings,base_firings,probes,iterations,tables_created,paths"
)


@dataclass(frozen=True)
class BenchEntry:
    spec: GraphSpec
    variant: Variant
    engine: EngineKind


@dataclass
class BenchPlan:
    entries: list[BenchEntry]
    repeats: int = 5
    fmt: FactFormat = FactFormat.TSV


@dataclass
class BenchRecord:
    """One CSV row: a single phase of a single entry.  Numeric fields are
    None on a failure row, and parameter fields are None when the family
    does not take them; both serialize to empty cells."""

    family: str
    n: int | None
    k: int | None
    h: int | None
    variant: str
    engine: str
    phase: str
    time_ms: float | None
    time_sd: float | None
    rec_firings: int | None
    base_firings: int | None
    probes: int | None
    iterations: int | None
    tables_created: int | None
    paths: int | None


def _entry_phases(engine: EngineKind) -> tuple[str, ...]:
    if engine is EngineKind.GROUND:
        return (PHASE_LOAD_RULES, PHASE_READ_DATA, PHASE_GROUND, PHASE_SOLVE, PHASE_WRITE_RES)
    return (PHASE_LOAD_RULES, PHASE_READ_DATA, PHASE_QUERY, PHASE_WRITE_RES)


def _one_cycle(
    edge_path: Path, fmt: FactFormat, entry: BenchEntry, out_path: Path
) -> tuple[dict[str, float], EvalResult]:
    """Read facts, run the engine, write results; returns phase -> ms."""
    times: dict[str, float] = {PHASE_LOAD_RULES: 0.0}
    t0 = time.perf_counter()
    edges = read_edges(edge_path.read_bytes(), fmt)
    times[PHASE_READ_DATA] = (time.perf_counter() - t0) * 1e3
    result = run_engine(entry.engine, edges, entry.variant)
    times.update(result.phase_times)
    t0 = time.perf_counter()
    out_path.write_bytes(write_paths(result.paths, fmt))
    times[PHASE_WRITE_RES] = (time.perf_counter() - t0) * 1e3
    return times, result


def run_plan(plan: BenchPlan, workdir: str | Path | None = None) -> list[BenchRecord]:
    """Run every plan entry and return one record per (entry, phase).

    All specs are validated before anything runs.  Edge files are generated
    once per distinct spec and reused.  An engine error aborts its entry and
    leaves a single failure row (empty time and counter cells)."""
    for entry in plan.entries:
        violation = entry.spec.validate()
        if violation is not None:
            raise InvalidSpecError(violation)

    with tempfile.TemporaryDirectory() as tmp:
        base = Path(workdir) if workdir is not None else Path(tmp)
        base.mkdir(parents=True, exist_ok=True)
        edge_files: dict[GraphSpec, Path] = {}
        records: list[BenchRecord] = []
        for entry in plan.entries:
            spec = entry.spec
            edge_path = edge_files.get(spec)
            if edge_path is None:
                edge_path = base / f"edges_{len(edge_files)}.{plan.fmt.value}"
                edge_path.write_bytes(write_edges(generate(spec), plan.fmt))
                edge_files[spec] = edge_path
            out_path = base / f"paths_{entry.engine.value}.{plan.fmt.value}"
            try:
                _, result = _one_cycle(edge_path, plan.fmt, entry, out_path)  # warmup
                samples: dict[str, list[float]] = {}
                for _ in range(plan.repeats):
                    times, result = _one_cycle(edge_path, plan.fmt, entry, out_path)
                    for phase, ms in times.items():
                        samples.setdefault(phase, []).append(ms)
            except Exception:
                records.append(
                    BenchRecord(
                        family=spec.family.value,
                        n=spec.n,
                        k=spec.k,
                        h=spec.h,
                        variant=entry.variant.value,
                        engine=entry.engine.value,
                        phase=_entry_phases(entry.engine)[2],
                        time_ms=None,
                        time_sd=None,
                        rec_firings=None,
                        base_firings=None,
                        probes=None,
                        iterations=None,
                        tables_created=None,
                        paths=None,
                    )
                )
                continue
            ins = result.instrumentation
            for phase in _entry_phases(entry.engine):
                values = samples[phase]
                records.append(
                    BenchRecord(
                        family=spec.family.value,
                        n=spec.n,
                        k=spec.k,
                        h=spec.h,
                        variant=entry.variant.value,
                        engine=entry.engine.value,
                        phase=phase,
                        time_ms=statistics.fmean(values),
                        time_sd=statistics.stdev(values) if len(values) > 1 else 0.0,
                        rec_firings=ins.rec_firings,
                        base_firings=ins.base_firings,
                        probes=ins.probes,
                        iterations=ins.iterations,
                        tables_created=ins.tables_created,
                        paths=len(result.paths),
                    )
                )
        return records


def sweep(
    family: Family,
    *,
    ns: Iterable[int] | None = None,
    ks: Iterable[int] | None = None,
    hs: Iterable[int] | None = None,
    k_equals_n: bool = False,
    variants: Iterable[Variant] = tuple(Variant),
    engines: Iterable[EngineKind] = tuple(EngineKind),
    repeats: int = 5,
    fmt: FactFormat = FactFormat.TSV,
) -> BenchPlan:
    """Cartesian plan over one family's parameter ranges.  With k_equals_n
    each n is paired with k=n instead of the ks list.  Every generated spec
    is validated; a bad combination rejects the whole sweep."""
    specs: list[GraphSpec] = []
    if hs is not None:
        for h in hs:
            specs.append(GraphSpec(family, h=h))
    elif k_equals_n:
        for n in ns or ():
            specs.append(GraphSpec(family, n=n, k=n))
    elif ks is not None:
        for n in ns or ():
            for k in ks:
                specs.append(GraphSpec(family, n=n, k=k))
    else:
        for n in ns or ():
            specs.append(GraphSpec(family, n=n))
    entries = [
        BenchEntry(spec, variant, engine)
        for spec in specs
        for variant in variants
        for engine in engines
    ]
    plan = BenchPlan(entries, repeats=repeats, fmt=fmt)
    for entry in plan.entries:
        violation = entry.spec.validate()
        if violation is not None:
            raise InvalidSpecError(violation)
    return plan


_FAMILY_BY_NAME = {f.value.lower(): f for f in Family}
_VARIANT_BY_NAME = {v.value: v for v in Variant}
_ENGINE_BY_NAME = {e.value: e for e in EngineKind}


def parse_plan(text: str) -> BenchPlan:
    """Parse the newline-delimited plan format.

    `repeats=N` and `format=tsv|prolog|asp` lines set plan-wide options;
    every other non-comment line is one entry:

        family n=N [k=N|k=n] [h=N] variant engine

    Lines starting with # are comments.  Errors name their line number."""
    entries: list[BenchEntry] = []
    repeats = 5
    fmt = FactFormat.TSV
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("repeats="):
            value = line.partition("=")[2]
            if not value.isdigit() or int(value) < 1:
                raise ValueError(f"line {line_no}: repeats wants a positive integer")
            repeats = int(value)
            continue
        if line.startswith("format="):
            value = line.partition("=")[2]
            try:
                fmt = FactFormat(value)
            except ValueError:
                raise ValueError(f"line {line_no}: unknown format {value!r}") from None
            continue
        tokens = line.split()
        family = _FAMILY_BY_NAME.get(tokens[0])
        if family is None:
            raise ValueError(f"line {line_no}: unknown family {tokens[0]!r}")
        params: dict[str, int | str] = {}
        variant: Variant | None = None
        engine: EngineKind | None = None
        for token in tokens[1:]:
            if "=" in token:
                name, _, value = token.partition("=")
                if name not in ("n", "k", "h"):
                    raise ValueError(f"line {line_no}: unknown parameter {name!r}")
                if name == "k" and value == "n":
                    params["k"] = "n"
                elif value.isdigit():
                    params[name] = int(value)
                else:
                    raise ValueError(f"line {line_no}: bad value in {token!r}")
            elif token in _VARIANT_BY_NAME:
                variant = _VARIANT_BY_NAME[token]
            elif token in _ENGINE_BY_NAME:
                engine = _ENGINE_BY_NAME[token]
            else:
                raise ValueError(f"line {line_no}: unknown token {token!r}")
        if variant is None or engine is None:
            raise ValueError(f"line {line_no}: entry wants a variant and an engine")
        if params.get("k") == "n":
            if "n" not in params:
                raise ValueError(f"line {line_no}: k=n without n")
            params["k"] = params["n"]
        spec = GraphSpec(family, **params)  # type: ignore[arg-type]
        violation = spec.validate()
        if violation is not None:
            raise ValueError(f"line {line_no}: {violation}")
        entries.append(BenchEntry(spec, variant, engine))
    return BenchPlan(entries, repeats=repeats, fmt=fmt)


def _cell(value: int | float | str | None) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    lines = [CSV_COMMENT, CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                _cell(v)
                for v in (
                    r.family, r.n, r.k, r.h, r.variant, r.engine, r.phase,
                    r.time_ms, r.time_sd, r.rec_firings, r.base_firings,
                    r.probes, r.iterations, r.tables_created, r.paths,
                )
            )
        )
    return "\n".join(lines) + "\n"
