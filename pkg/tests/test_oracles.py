"""Oracle tests: the brute-force ground truth itself is cross-checked here
against literal triple-loop enumeration and hand-computed examples, since
every other suite leans on it.

Also pins the status of the left/right combination-count identity: it holds
for every generated family instance and for symmetric relations, but it is
NOT a theorem for arbitrary digraphs — two minimal counterexamples (one of
them acyclic) are frozen below, and the random-digraph variant of the check
is kept as an expected failure.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from closurelab.core import Family, GraphSpec, Variant
from closurelab.graphs import generate
from closurelab.oracles import (
    check_left_right_theorem,
    count_combinations_oracle,
    reachability_oracle,
)

S = GraphSpec

edge_relations = st.frozensets(
    st.tuples(st.integers(1, 8), st.integers(1, 8)), max_size=24
)


def literal_triple_count(edges, variant):
    """Reference count by scanning all (a, b, c) triples explicitly."""
    paths = reachability_oracle(edges)
    first = paths if variant in (Variant.LEFT, Variant.DOUBLE) else edges
    second = edges if variant is Variant.LEFT else paths
    vertices = {v for pair in edges for v in pair}
    total = 0
    for a in vertices:
        for b in vertices:
            for c in vertices:
                if (a, b) in first and (b, c) in second:
                    total += 1
    return total


def test_closure_of_chain():
    assert reachability_oracle(frozenset({(1, 2), (2, 3)})) == frozenset(
        {(1, 2), (2, 3), (1, 3)}
    )


def test_closure_of_cycle_is_complete():
    edges = generate(S(Family.CYC, n=3))
    assert reachability_oracle(edges) == frozenset(
        (a, b) for a in (1, 2, 3) for b in (1, 2, 3)
    )


def test_closure_of_empty_is_empty():
    assert reachability_oracle(frozenset()) == frozenset()


def test_closure_of_self_loop():
    assert reachability_oracle(frozenset({(1, 1)})) == frozenset({(1, 1)})


@given(edge_relations)
def test_closure_contains_edges_and_is_transitive(edges):
    paths = reachability_oracle(edges)
    assert edges <= paths
    assert all(
        (a, c) in paths for (a, b) in paths for (b2, c) in paths if b == b2
    )


@given(edge_relations)
def test_closure_is_idempotent_under_augmentation(edges):
    paths = reachability_oracle(edges)
    assert reachability_oracle(edges | paths) == paths


@pytest.mark.parametrize(
    "edges, variant, expected",
    [
        (generate(S(Family.PATH, n=4)), Variant.LEFT, 3),
        (generate(S(Family.CYC, n=3)), Variant.DOUBLE, 27),
        (generate(S(Family.W, n=2, k=2)), Variant.LEFT, 0),
        (frozenset(), Variant.LEFT, 0),
        (frozenset({(1, 1)}), Variant.DOUBLE, 1),
    ],
)
def test_combination_counts_frozen(edges, variant, expected):
    assert count_combinations_oracle(edges, variant) == expected


@settings(max_examples=150)
@given(edge_relations, st.sampled_from(list(Variant)))
def test_combination_count_equals_literal_triple_scan(edges, variant):
    assert count_combinations_oracle(edges, variant) == literal_triple_count(
        edges, variant
    )


def test_left_right_check_on_empty():
    assert check_left_right_theorem(frozenset())


def _family_sweep():
    for family in (Family.CMPL, Family.MAX_ACYC, Family.CYC, Family.PATH, Family.GRID):
        for n in range(1, 11):
            yield S(family, n=n)
    for n, k in ((6, 1), (6, 2), (6, 5), (12, 2), (12, 5)):
        yield S(Family.CYC_EXTRA, n=n, k=k)
    for family in (Family.PATH_DISJ, Family.X, Family.Y, Family.W):
        for n in range(1, 7):
            for k in (1, 3, n):
                yield S(family, n=n, k=k)
    for family in (Family.BIN_TREE, Family.BIN_TREE_REV):
        for h in range(1, 7):
            yield S(family, h=h)


def test_left_right_counts_agree_on_every_family_instance():
    # Every family's edge set is isomorphic to its own reverse (X(n,k)
    # reverses to X(k,n) with the same symmetric count), so the identity
    # holds on all of them -- including the degenerate corner instances.
    for spec in _family_sweep():
        assert check_left_right_theorem(generate(spec)), spec.label()


@given(edge_relations)
def test_left_right_counts_agree_on_symmetric_relations(edges):
    symmetric = edges | frozenset((b, a) for (a, b) in edges)
    assert check_left_right_theorem(symmetric)


def test_left_right_counterexample_four_edges():
    # Smallest loop-free refutation: both joins enumerated literally.
    edges = frozenset({(1, 2), (1, 3), (2, 1), (2, 3)})
    assert count_combinations_oracle(edges, Variant.LEFT) == 8
    assert count_combinations_oracle(edges, Variant.RIGHT) == 6
    assert literal_triple_count(edges, Variant.LEFT) == 8
    assert literal_triple_count(edges, Variant.RIGHT) == 6
    assert not check_left_right_theorem(edges)


def test_left_right_counterexample_acyclic():
    # Acyclicity does not rescue the identity: this DAG fires 6 vs 5.
    edges = frozenset({(2, 5), (3, 7), (5, 4), (7, 4), (7, 5), (7, 6)})
    assert count_combinations_oracle(edges, Variant.LEFT) == 6
    assert count_combinations_oracle(edges, Variant.RIGHT) == 5
    assert not check_left_right_theorem(edges)


@pytest.mark.xfail(
    strict=True,
    reason="left/right combination counts are not equal for arbitrary "
    "digraphs (see the pinned counterexamples above); roughly a third of "
    "G(n, p) samples at these sizes violate the identity",
)
def test_left_right_counts_agree_on_random_digraphs():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(2, 30)
        p = rng.choice((0.1, 0.25, 0.5))
        edges = frozenset(
            (a, b)
            for a in range(1, n + 1)
            for b in range(1, n + 1)
            if a != b and rng.random() < p
        )
        assert check_left_right_theorem(edges)
