"""Reading and writing fact files in the three dialects the engines'
ecosystem speaks: tab-separated pairs, Prolog facts, and ASP facts.

Writers emit pairs in (source, target) order, one fact per line, so output
is byte-deterministic.  The reader is strict about shape (a single TAB for
tsv; for the fact dialects only whitespace after the comma is tolerated)
and names the offending line on a parse error.
"""

from __future__ import annotations

import re
from enum import Enum
from typing import Iterable

from .core import Pair, Relation


class FactFormat(Enum):
    TSV = "tsv"
    PROLOG = "prolog"
    ASP = "asp"

    def __str__(self) -> str:
        return self.value


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


_TSV_LINE = re.compile(r"^([0-9]+)\t([0-9]+)$")
_FACT_LINE = re.compile(r"^edge\(([0-9]+),\s*([0-9]+)\)\.$")


def _render(pairs: Iterable[Pair], fmt: FactFormat, predicate: str) -> bytes:
    lines = []
    for a, b in sorted(set(pairs)):
        if fmt is FactFormat.TSV:
            lines.append(f"{a}\t{b}\n")
        else:
            lines.append(f"{predicate}({a},{b}).\n")
    return "".join(lines).encode("ascii")


def write_edges(edges: Iterable[Pair], fmt: FactFormat) -> bytes:
    return _render(edges, fmt, "edge")


def write_paths(paths: Iterable[Pair], fmt: FactFormat) -> bytes:
    return _render(paths, fmt, "path")


def read_edges(data: bytes | str, fmt: FactFormat) -> Relation:
    """Parse an edge-fact file.  Blank lines are ignored and duplicate facts
    collapse; anything else that does not match the dialect's line shape
    raises ParseError with its line number."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if fmt is FactFormat.TSV:
        pattern, shape = _TSV_LINE, "S<TAB>T"
    else:
        pattern, shape = _FACT_LINE, "edge(S,T)."
    edges: set[Pair] = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        m = pattern.match(line)
        if m is None:
            raise ParseError(line_no, f"expected {shape}, got {line!r}")
        a, b = int(m.group(1)), int(m.group(2))
        if a < 1 or b < 1:
            raise ParseError(line_no, f"vertex ids are positive, got {line!r}")
        edges.add((a, b))
    return frozenset(edges)
