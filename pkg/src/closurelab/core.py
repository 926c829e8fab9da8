"""Shared vocabulary for the closure lab: graph specs, recursion variants,
engine tags, and the instrumentation record every engine fills in.

Vertices are plain positive ints.  Relations (edge sets, path sets) are
frozensets of (source, target) pairs; nothing here assumes ids are dense
or contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

Pair = tuple[int, int]
Relation = frozenset[Pair]


class InvalidSpecError(ValueError):
    """Raised when a graph spec fails validation."""


class IntegrityError(RuntimeError):
    """Raised when an internal consistency check fails (bad ground program,
    inexact closed-form division, and the like)."""


class Variant(Enum):
    """Which recursive rule defines path/2 on top of path(X,Y) :- edge(X,Y)."""

    LEFT = "left"      # path(X,Y) :- path(X,Z), edge(Z,Y).
    RIGHT = "right"    # path(X,Y) :- edge(X,Z), path(Z,Y).
    DOUBLE = "double"  # path(X,Y) :- path(X,Z), path(Z,Y).

    def __str__(self) -> str:
        return self.value


class EngineKind(Enum):
    SEMINAIVE = "seminaive"
    MININCREMENT = "minincrement"
    TOPDOWN = "topdown"
    GROUND = "ground"

    def __str__(self) -> str:
        return self.value


class Family(Enum):
    """The twelve structured graph families the lab knows how to build."""

    CMPL = "Cmpl"                # complete digraph with self-loops
    MAX_ACYC = "MaxAcyc"         # maximal DAG: every i < j
    CYC = "Cyc"                  # single directed cycle
    CYC_EXTRA = "CycExtra"       # cycle plus k evenly spaced chords per vertex
    PATH = "Path"                # single directed path
    PATH_DISJ = "PathDisj"       # k vertex-disjoint paths of n vertices each
    GRID = "Grid"                # n x n grid, edges right and down
    BIN_TREE = "BinTree"         # complete binary tree, edges toward leaves
    BIN_TREE_REV = "BinTreeRev"  # complete binary tree, edges toward root
    X = "X"                      # n sources -> center -> k sinks
    Y = "Y"                      # n sources -> center -> path of k vertices
    W = "W"                      # bipartite: each of n sources hits k sinks

    def __str__(self) -> str:
        return self.value


# Parameters each family takes ("n", "k", "h") and the lower bound for each.
_FAMILY_PARAMS: dict[Family, dict[str, int]] = {
    Family.CMPL: {"n": 1},
    Family.MAX_ACYC: {"n": 1},
    Family.CYC: {"n": 1},
    Family.CYC_EXTRA: {"n": 1, "k": 0},
    Family.PATH: {"n": 1},
    Family.PATH_DISJ: {"n": 1, "k": 1},
    Family.GRID: {"n": 1},
    Family.BIN_TREE: {"h": 1},
    Family.BIN_TREE_REV: {"h": 1},
    Family.X: {"n": 1, "k": 1},
    Family.Y: {"n": 1, "k": 1},
    Family.W: {"n": 1, "k": 1},
}


@dataclass(frozen=True)
class GraphSpec:
    """A graph family plus its parameter assignment, e.g. Grid(n=4)."""

    family: Family
    n: int | None = None
    k: int | None = None
    h: int | None = None

    def params(self) -> dict[str, int]:
        """The parameters actually present, in n, k, h order."""
        out = {}
        for name in ("n", "k", "h"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out

    def label(self) -> str:
        inner = ", ".join(f"{p}={v}" for p, v in self.params().items())
        return f"{self.family.value}({inner})"

    def validate(self) -> str | None:
        """Return None if the spec is well formed, else a violation message."""
        wanted = _FAMILY_PARAMS[self.family]
        for name, value in self.params().items():
            if name not in wanted:
                return f"{self.family.value} does not take parameter {name}"
        for name, low in wanted.items():
            value = getattr(self, name)
            if value is None:
                return f"{self.family.value} requires parameter {name}"
            if value < low:
                return f"{self.family.value} requires {name} >= {low}"
        if self.family is Family.CYC_EXTRA:
            assert self.n is not None and self.k is not None
            if self.n % (self.k + 1) != 0:
                return (
                    f"{self.family.value} requires that (k+1) must divide n "
                    f"(got n={self.n}, k={self.k})"
                )
        return None


def validate_spec(spec: GraphSpec) -> str | None:
    """Module-level alias for GraphSpec.validate."""
    return spec.validate()


def checked_spec(spec: GraphSpec) -> GraphSpec:
    """Return spec unchanged, raising InvalidSpecError if it is malformed."""
    violation = spec.validate()
    if violation is not None:
        raise InvalidSpecError(violation)
    return spec


@dataclass
class Instrumentation:
    """Counters every engine reports.

    rec_firings counts successful combinations of facts against the recursive
    rule's hypotheses; base_firings counts base-rule firings (one per edge);
    probes counts candidate facts retrieved from an index, including ones an
    engine retrieves more than once.  probes is diagnostic only: it may vary
    between engines, the other counters are deterministic per (edges, variant,
    engine).
    """

    rec_firings: int = 0
    base_firings: int = 0
    probes: int = 0
    iterations: int = 0
    duplicate_derivations: int = 0
    tables_created: int = 0


# Phase tags used in EvalResult.phase_times and the bench CSV.
PHASE_LOAD_RULES = "LoadRules"
PHASE_READ_DATA = "ReadData"
PHASE_QUERY = "Query"
PHASE_GROUND = "Ground"
PHASE_SOLVE = "Solve"
PHASE_WRITE_RES = "WriteRes"

# Emission order for reports.  The ground engine reports Ground and Solve
# where the in-memory engines report Query.
PHASE_ORDER = (
    PHASE_LOAD_RULES,
    PHASE_READ_DATA,
    PHASE_QUERY,
    PHASE_GROUND,
    PHASE_SOLVE,
    PHASE_WRITE_RES,
)


@dataclass
class EvalResult:
    """What an engine run produces: the path relation, counters, and the
    wall-clock milliseconds spent per inference phase."""

    paths: Relation
    instrumentation: Instrumentation
    phase_times: dict[str, float] = field(default_factory=dict)


def vertex_set(pairs: Relation) -> frozenset[int]:
    """Every vertex incident to at least one pair."""
    out: set[int] = set()
    for a, b in pairs:
        out.add(a)
        out.add(b)
    return frozenset(out)
