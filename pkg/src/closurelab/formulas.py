"""Closed-form predictions per graph family: how many vertices, edges, and
closure paths an instance has, and how many hypothesis combinations each
recursion variant admits.

Everything is exact integer arithmetic; divisions assert a zero remainder
instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Family, GraphSpec, IntegrityError, checked_spec
from .graphs import edge_count, vertex_count


@dataclass(frozen=True)
class ClosedFormPrediction:
    vertices: int
    edges: int
    paths: int
    combos_left: int
    combos_right: int
    combos_double: int


def _exact_div(numerator: int, divisor: int) -> int:
    quotient, remainder = divmod(numerator, divisor)
    if remainder != 0:
        raise IntegrityError(
            f"closed form is not integral: {numerator} / {divisor} leaves {remainder}"
        )
    return quotient


def predict(spec: GraphSpec) -> ClosedFormPrediction:
    """Closed-form counts for a validated spec.

    combos_left always equals combos_right: on any graph the left- and
    right-recursive rules admit the same number of combinations.
    """
    checked_spec(spec)
    family, n, k, h = spec.family, spec.n, spec.k, spec.h

    if family is Family.CMPL:
        paths = n * n
        left = n**3
        double = n**3
    elif family is Family.MAX_ACYC:
        paths = _exact_div(n * (n - 1), 2)
        left = _exact_div(n * (n - 1) * (n - 2), 6)
        double = left
    elif family is Family.CYC:
        paths = n * n
        left = n * n
        double = n**3
    elif family is Family.CYC_EXTRA:
        paths = n * n
        left = n * n * (1 + k)
        double = n**3
    elif family is Family.PATH:
        paths = _exact_div(n * (n - 1), 2)
        left = _exact_div((n - 1) * (n - 2), 2)
        double = _exact_div(n * (n - 1) * (n - 2), 6)
    elif family is Family.PATH_DISJ:
        paths = _exact_div(n * (n - 1) * k, 2)
        left = _exact_div((n - 1) * (n - 2) * k, 2)
        double = _exact_div(n * (n - 1) * (n - 2) * k, 6)
    elif family is Family.GRID:
        paths = _exact_div(n * n * (n + 3) * (n - 1), 4)
        left = _exact_div(n * (n**3 - 5 * n + 4), 2)
        double = _exact_div((n**3 + 7 * n * n + 2 * n - 22) * n * n * (n - 1), 36)
    elif family in (Family.BIN_TREE, Family.BIN_TREE_REV):
        paths = 2**h * (h - 2) + 2
        left = 2**h * (h - 3) + 4
        double = 2 ** (h - 1) * (h * h - 5 * h + 8) - 4
    elif family is Family.X:
        paths = n + k + n * k
        left = n * k
        double = n * k
    elif family is Family.Y:
        paths = _exact_div((2 * n + k - 1) * k, 2)
        left = _exact_div((2 * n + k - 2) * (k - 1), 2)
        double = _exact_div((3 * n + k - 2) * k * (k - 1), 6)
    elif family is Family.W:
        paths = n * k
        left = 0
        double = 0
    else:  # pragma: no cover - Family is closed
        raise AssertionError(family)

    return ClosedFormPrediction(
        vertices=vertex_count(spec),
        edges=edge_count(spec),
        paths=paths,
        combos_left=left,
        combos_right=left,
        combos_double=double,
    )


def predict_bintree_right_by_level(h: int, family: Family) -> int:
    """Right-recursion combination count for the tree families, accumulated
    level by level instead of in closed form.

    Toward leaves, the edges at depth i each pair with every closure pair
    leaving their target subtree root; toward the root, the edges out of
    level i each pair with the chain of ancestors above.  Both sums equal
    predict(...).combos_right for the matching h.
    """
    if h < 1:
        raise ValueError("h >= 1")
    if family is Family.BIN_TREE:
        return sum(2**i * (2 ** (h - i) - 2) for i in range(1, h))
    if family is Family.BIN_TREE_REV:
        return sum(2 ** (i - 1) * (i - 2) for i in range(2, h + 1))
    raise ValueError(f"level sums are defined for the tree families, not {family.value}")


PREDICTION_CSV_HEADER = "family,n,k,h,vertices,edges,paths,combos_left,combos_right,combos_double"


def prediction_csv_row(spec: GraphSpec) -> str:
    """One CSV data row for a spec's prediction; absent parameters stay empty."""
    p = predict(spec)
    cells = [
        spec.family.value,
        "" if spec.n is None else str(spec.n),
        "" if spec.k is None else str(spec.k),
        "" if spec.h is None else str(spec.h),
        str(p.vertices),
        str(p.edges),
        str(p.paths),
        str(p.combos_left),
        str(p.combos_right),
        str(p.combos_double),
    ]
    return ",".join(cells)
