"""closurelab: instrumented transitive-closure engines whose measured work
is checked, exactly, against closed-form predictions per graph family.

Four engines (semi-naive, minimum-increment, tabled top-down, and
ground-and-solve) compute path/2 over edge/2 under three recursion
variants, counting rule firings as they go; twelve structured graph
families come with closed forms for how many firings an optimal evaluation
needs, and independent oracles keep everyone honest.
"""

from .bench import (
    BenchEntry,
    BenchPlan,
    BenchRecord,
    parse_plan,
    records_to_csv,
    run_plan,
    sweep,
)
from .core import (
    EngineKind,
    EvalResult,
    Family,
    GraphSpec,
    Instrumentation,
    IntegrityError,
    InvalidSpecError,
    Pair,
    Relation,
    Variant,
    validate_spec,
)
from .engines import (
    GroundInstance,
    GroundProgram,
    ground,
    run_engine,
    solve_ground,
    solve_minincrement,
    solve_seminaive,
    solve_topdown,
)
from .fileformats import FactFormat, ParseError, read_edges, write_edges, write_paths
from .formulas import (
    ClosedFormPrediction,
    predict,
    predict_bintree_right_by_level,
    prediction_csv_row,
)
from .graphs import edge_count, generate, vertex_count
from .oracles import (
    check_left_right_theorem,
    count_combinations_oracle,
    reachability_oracle,
)

__all__ = [
    "BenchEntry",
    "BenchPlan",
    "BenchRecord",
    "ClosedFormPrediction",
    "EngineKind",
    "EvalResult",
    "FactFormat",
    "Family",
    "GraphSpec",
    "GroundInstance",
    "GroundProgram",
    "Instrumentation",
    "IntegrityError",
    "InvalidSpecError",
    "Pair",
    "ParseError",
    "Relation",
    "Variant",
    "check_left_right_theorem",
    "count_combinations_oracle",
    "edge_count",
    "generate",
    "ground",
    "parse_plan",
    "predict",
    "predict_bintree_right_by_level",
    "prediction_csv_row",
    "reachability_oracle",
    "records_to_csv",
    "run_engine",
    "run_plan",
    "solve_ground",
    "solve_minincrement",
    "solve_seminaive",
    "solve_topdown",
    "sweep",
    "validate_spec",
    "vertex_count",
    "write_edges",
    "write_paths",
    "read_edges",
]
