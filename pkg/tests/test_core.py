"""Data-model tests: enums, spec validation, and instrumentation defaults."""

import pytest

from closurelab.core import (
    EngineKind,
    Family,
    GraphSpec,
    Instrumentation,
    InvalidSpecError,
    PHASE_ORDER,
    Variant,
    checked_spec,
    validate_spec,
    vertex_set,
)


def test_variant_tags():
    assert [v.value for v in Variant] == ["left", "right", "double"]
    assert str(Variant.LEFT) == "left"


def test_engine_tags():
    assert [e.value for e in EngineKind] == [
        "seminaive",
        "minincrement",
        "topdown",
        "ground",
    ]


def test_family_names():
    assert [f.value for f in Family] == [
        "Cmpl",
        "MaxAcyc",
        "Cyc",
        "CycExtra",
        "Path",
        "PathDisj",
        "Grid",
        "BinTree",
        "BinTreeRev",
        "X",
        "Y",
        "W",
    ]


def test_phase_order_is_fixed():
    assert PHASE_ORDER == (
        "LoadRules",
        "ReadData",
        "Query",
        "Ground",
        "Solve",
        "WriteRes",
    )


def test_spec_equality_is_structural():
    assert GraphSpec(Family.CMPL, n=3) == GraphSpec(Family.CMPL, n=3)
    assert GraphSpec(Family.CMPL, n=3) != GraphSpec(Family.CMPL, n=4)
    assert GraphSpec(Family.CMPL, n=3) != GraphSpec(Family.CYC, n=3)


def test_spec_label_and_params():
    spec = GraphSpec(Family.CYC_EXTRA, n=12, k=2)
    assert spec.params() == {"n": 12, "k": 2}
    assert spec.label() == "CycExtra(n=12, k=2)"
    assert GraphSpec(Family.BIN_TREE, h=3).label() == "BinTree(h=3)"


@pytest.mark.parametrize(
    "spec",
    [
        GraphSpec(Family.CMPL, n=1),
        GraphSpec(Family.MAX_ACYC, n=1),
        GraphSpec(Family.CYC, n=1),
        GraphSpec(Family.CYC_EXTRA, n=10, k=4),
        GraphSpec(Family.CYC_EXTRA, n=6, k=0),
        GraphSpec(Family.PATH, n=1),
        GraphSpec(Family.PATH_DISJ, n=1, k=1),
        GraphSpec(Family.GRID, n=3),
        GraphSpec(Family.BIN_TREE, h=1),
        GraphSpec(Family.BIN_TREE_REV, h=7),
        GraphSpec(Family.X, n=1, k=1),
        GraphSpec(Family.Y, n=1, k=1),
        GraphSpec(Family.W, n=1, k=1),
    ],
)
def test_valid_specs(spec):
    assert validate_spec(spec) is None
    assert checked_spec(spec) is spec


@pytest.mark.parametrize(
    "spec, message",
    [
        (GraphSpec(Family.CMPL, n=0), "Cmpl requires n >= 1"),
        (GraphSpec(Family.CMPL), "Cmpl requires parameter n"),
        (GraphSpec(Family.CMPL, n=3, k=2), "Cmpl does not take parameter k"),
        (GraphSpec(Family.BIN_TREE, h=0), "BinTree requires h >= 1"),
        (GraphSpec(Family.BIN_TREE, n=3), "BinTree does not take parameter n"),
        (GraphSpec(Family.X, n=2), "X requires parameter k"),
        (GraphSpec(Family.X, n=2, k=0), "X requires k >= 1"),
        (GraphSpec(Family.PATH_DISJ, n=0, k=1), "PathDisj requires n >= 1"),
        (GraphSpec(Family.W, n=2, k=2, h=1), "W does not take parameter h"),
        (
            GraphSpec(Family.CYC_EXTRA, n=10, k=3),
            "CycExtra requires that (k+1) must divide n (got n=10, k=3)",
        ),
        (
            GraphSpec(Family.CYC_EXTRA, n=7, k=1),
            "CycExtra requires that (k+1) must divide n (got n=7, k=1)",
        ),
    ],
)
def test_invalid_specs(spec, message):
    assert validate_spec(spec) == message
    with pytest.raises(InvalidSpecError, match="requires|take"):
        checked_spec(spec)


def test_checked_spec_error_carries_message():
    with pytest.raises(InvalidSpecError) as err:
        checked_spec(GraphSpec(Family.CMPL, n=0))
    assert str(err.value) == "Cmpl requires n >= 1"


def test_instrumentation_defaults_to_zero():
    instr = Instrumentation()
    assert instr.base_firings == 0
    assert instr.rec_firings == 0
    assert instr.probes == 0
    assert instr.iterations == 0
    assert instr.duplicate_derivations == 0
    assert instr.tables_created == 0


def test_vertex_set():
    assert vertex_set(frozenset()) == frozenset()
    assert vertex_set(frozenset({(1, 2), (2, 5)})) == frozenset({1, 2, 5})
