"""Generators for the twelve structured graph families, plus closed-form
vertex and edge counts.

All vertices are 1-based.  Generators follow the set definitions literally,
so at two degenerate corners the generated set is smaller than the closed
form says: CycExtra with n == k+1 (the nearest chord coincides with a cycle
edge) and W with k > n (sink indices wrap around).  The closed forms assume
chord spacing >= 2 and k <= n respectively; tests pin both corners.
"""

from __future__ import annotations

from .core import Family, GraphSpec, Pair, Relation, checked_spec


def _gen_cmpl(n: int) -> set[Pair]:
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)}


def _gen_max_acyc(n: int) -> set[Pair]:
    return {(i, j) for i in range(1, n) for j in range(i + 1, n + 1)}


def _gen_cyc(n: int) -> set[Pair]:
    return {(i, i + 1) for i in range(1, n)} | {(n, 1)}


def _gen_cyc_extra(n: int, k: int) -> set[Pair]:
    spacing = n // (k + 1)
    chords = {
        (i, (i - 1 + t * spacing) % n + 1)
        for i in range(1, n + 1)
        for t in range(1, k + 1)
    }
    return chords | _gen_cyc(n)


def _gen_path(n: int) -> set[Pair]:
    return {(i, i + 1) for i in range(1, n)}


def _gen_path_disj(n: int, k: int) -> set[Pair]:
    return {(i, i + k) for i in range(1, (n - 1) * k + 1)}


def _gen_grid(n: int) -> set[Pair]:
    across = {
        (j, j + 1)
        for i in range(1, n + 1)
        for j in range((i - 1) * n + 1, i * n)
    }
    down = {
        (j, j + n)
        for i in range(1, n)
        for j in range((i - 1) * n + 1, i * n + 1)
    }
    return across | down


def _gen_bin_tree(h: int) -> set[Pair]:
    internal = range(1, 2 ** (h - 1))
    return {(i, 2 * i) for i in internal} | {(i, 2 * i + 1) for i in internal}


def _gen_bin_tree_rev(h: int) -> set[Pair]:
    internal = range(1, 2 ** (h - 1))
    return {(2 * i, i) for i in internal} | {(2 * i + 1, i) for i in internal}


def _gen_x(n: int, k: int) -> set[Pair]:
    center = n + 1
    return {(i, center) for i in range(1, n + 1)} | {
        (center, center + j) for j in range(1, k + 1)
    }


def _gen_y(n: int, k: int) -> set[Pair]:
    center = n + 1
    return {(i, center) for i in range(1, n + 1)} | {
        (i, i + 1) for i in range(center, n + k)
    }


def _gen_w(n: int, k: int) -> set[Pair]:
    return {
        (i, n + 1 + (i + j - 1) % n)
        for i in range(1, n + 1)
        for j in range(1, k + 1)
    }


def generate(spec: GraphSpec) -> Relation:
    """Build the edge relation for a validated spec."""
    checked_spec(spec)
    family, n, k, h = spec.family, spec.n, spec.k, spec.h
    if family is Family.CMPL:
        edges = _gen_cmpl(n)
    elif family is Family.MAX_ACYC:
        edges = _gen_max_acyc(n)
    elif family is Family.CYC:
        edges = _gen_cyc(n)
    elif family is Family.CYC_EXTRA:
        edges = _gen_cyc_extra(n, k)
    elif family is Family.PATH:
        edges = _gen_path(n)
    elif family is Family.PATH_DISJ:
        edges = _gen_path_disj(n, k)
    elif family is Family.GRID:
        edges = _gen_grid(n)
    elif family is Family.BIN_TREE:
        edges = _gen_bin_tree(h)
    elif family is Family.BIN_TREE_REV:
        edges = _gen_bin_tree_rev(h)
    elif family is Family.X:
        edges = _gen_x(n, k)
    elif family is Family.Y:
        edges = _gen_y(n, k)
    elif family is Family.W:
        edges = _gen_w(n, k)
    else:  # pragma: no cover - Family is closed
        raise AssertionError(family)
    return frozenset(edges)


def vertex_count(spec: GraphSpec) -> int:
    """Closed-form vertex count.  Isolated vertices (degenerate minima such
    as Path(n=1)) are counted even though they touch no edge."""
    checked_spec(spec)
    family, n, k, h = spec.family, spec.n, spec.k, spec.h
    if family in (Family.CMPL, Family.MAX_ACYC, Family.CYC, Family.CYC_EXTRA, Family.PATH):
        return n
    if family is Family.PATH_DISJ:
        return n * k
    if family is Family.GRID:
        return n * n
    if family in (Family.BIN_TREE, Family.BIN_TREE_REV):
        return 2**h - 1
    if family is Family.X:
        return n + k + 1
    if family is Family.Y:
        return n + k
    if family is Family.W:
        return 2 * n
    raise AssertionError(family)  # pragma: no cover


def edge_count(spec: GraphSpec) -> int:
    """Closed-form edge count; equals len(generate(spec)) away from the two
    degenerate corners noted in the module docstring."""
    checked_spec(spec)
    family, n, k, h = spec.family, spec.n, spec.k, spec.h
    if family is Family.CMPL:
        return n * n
    if family is Family.MAX_ACYC:
        return n * (n - 1) // 2
    if family is Family.CYC:
        return n
    if family is Family.CYC_EXTRA:
        return n + n * k
    if family is Family.PATH:
        return n - 1
    if family is Family.PATH_DISJ:
        return (n - 1) * k
    if family is Family.GRID:
        return 2 * n * (n - 1)
    if family in (Family.BIN_TREE, Family.BIN_TREE_REV):
        return 2**h - 2
    if family is Family.X:
        return n + k
    if family is Family.Y:
        return n + k - 1
    if family is Family.W:
        return n * k
    raise AssertionError(family)  # pragma: no cover
