"""Independent ground-truth oracles for the closure engines.

Everything here is deliberately naive and shares no code with the engines:
reachability is a per-source breadth-first traversal, combination counts are
plain enumeration over the closure.  Tests freeze expected values computed
by these oracles and hold every engine to them.
"""

from __future__ import annotations

from collections import deque

from .core import Pair, Relation, Variant


def reachability_oracle(edges: Relation) -> Relation:
    """All pairs (u, v) with a directed path of at least one edge from u to v.

    Note (u, u) is present only when u lies on a cycle; the empty path does
    not count.
    """
    succ: dict[int, list[int]] = {}
    sources: set[int] = set()
    for a, b in edges:
        succ.setdefault(a, []).append(b)
        sources.add(a)

    closure: set[Pair] = set()
    for u in sources:
        seen: set[int] = set()
        frontier = deque(succ[u])
        while frontier:
            v = frontier.popleft()
            if v in seen:
                continue
            seen.add(v)
            frontier.extend(succ.get(v, ()))
        closure.update((u, v) for v in seen)
    return frozenset(closure)


def count_combinations_oracle(edges: Relation, variant: Variant) -> int:
    """How many distinct hypothesis combinations the recursive rule admits
    over the full closure P and edge set E:

        left    |{(a,b,c) : (a,b) in P, (b,c) in E}|
        right   |{(a,b,c) : (a,b) in E, (b,c) in P}|
        double  |{(a,b,c) : (a,b) in P, (b,c) in P}|

    Counted by enumerating the left factor and sizing the matching bucket of
    the right factor; tests cross-check this against a literal triple scan.
    """
    paths = reachability_oracle(edges)
    right_factor = edges if variant is Variant.LEFT else paths
    out_index: dict[int, int] = {}
    for a, _ in right_factor:
        out_index[a] = out_index.get(a, 0) + 1

    left_factor = paths if variant in (Variant.LEFT, Variant.DOUBLE) else edges
    total = 0
    for _, b in left_factor:
        total += out_index.get(b, 0)
    return total


def check_left_right_theorem(edges: Relation) -> bool:
    """Left- and right-recursion admit the same number of combinations on
    every graph; True when the oracle counts agree."""
    return count_combinations_oracle(edges, Variant.LEFT) == count_combinations_oracle(
        edges, Variant.RIGHT
    )
