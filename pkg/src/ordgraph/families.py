"""Generators for the named ordered graph families.

Matching-based families use ``a_i = 2(i-1)`` and ``b_i = 2i-1`` for the
1-based left/right vertices, i.e. double ``i`` (0-based) is ``(2i, 2i+1)``.
"""

from __future__ import annotations

from itertools import combinations

from .errors import GraphError
from .graphs import DirectedOrderedGraph, Orientation, OrderedGraph, OrientedOrderedGraph


def gen_matching(n: int) -> OrderedGraph:
    return OrderedGraph(2 * n, frozenset((2 * i, 2 * i + 1) for i in range(n)))


def gen_complete(n: int) -> OrderedGraph:
    return OrderedGraph(n, frozenset(combinations(range(n), 2)))


def gen_edgeless(n: int) -> OrderedGraph:
    return OrderedGraph(n)


def gen_path(m: int) -> OrderedGraph:
    return OrderedGraph(m, frozenset((i, i + 1) for i in range(m - 1)))


def _augmented(n: int, lr: bool, rl: bool) -> OrderedGraph:
    if n < 1:
        raise GraphError("family size must be at least 1")
    edges = {(2 * i, 2 * i + 1) for i in range(n)}
    for i, j in combinations(range(n), 2):
        if lr:
            edges.add((2 * i, 2 * j + 1))
        if rl:
            edges.add((2 * i + 1, 2 * j))
    return OrderedGraph(2 * n, frozenset(edges))


def gen_mlr(n: int) -> OrderedGraph:
    """``M_n`` plus every edge ``a_i b_j`` with ``i < j``."""
    return _augmented(n, lr=True, rl=False)


def gen_mrl(n: int) -> OrderedGraph:
    """``M_n`` plus every edge ``b_i a_j`` with ``i < j``."""
    return _augmented(n, lr=False, rl=True)


def gen_mplus(n: int) -> OrderedGraph:
    return _augmented(n, lr=True, rl=True)


_VARIANTS = {"R": Orientation.FORWARD, "L": Orientation.BACKWARD, "D": Orientation.BOTH}


def gen_oriented_matching(n: int, variant: str) -> OrientedOrderedGraph | DirectedOrderedGraph:
    """``M_n`` with every double oriented ``a->b`` (R), ``b->a`` (L) or both ways (D)."""
    try:
        o = _VARIANTS[variant]
    except KeyError:
        raise ValueError(f"variant must be one of R, L, D, got {variant!r}") from None
    cls = DirectedOrderedGraph if variant == "D" else OrientedOrderedGraph
    return cls(2 * n, {(2 * i, 2 * i + 1): o for i in range(n)})


def gen_crossing(n: int) -> OrientedOrderedGraph:
    """Every vertex of degree 1, nested pairs ``i <-> 2n-1-i`` with alternating direction.

    The outermost pair points low to high: arcs ``0->2n-1``, ``2n-2->1``,
    ``2->2n-3``, ...
    """
    if n < 1:
        raise GraphError("crossing construction needs n >= 1")
    arcs = {}
    for i in range(n):
        arcs[(i, 2 * n - 1 - i)] = Orientation.FORWARD if i % 2 == 0 else Orientation.BACKWARD
    return OrientedOrderedGraph(2 * n, arcs)


def gen_asymmetry_example() -> OrientedOrderedGraph:
    """Five vertices on which the oriented greedy needs 4 blocks from the left, 3 from the right."""
    return OrientedOrderedGraph.from_arcs(5, [(2, 0), (4, 0), (1, 3), (2, 4)])


FAMILIES = {
    "matching": gen_matching,
    "complete": gen_complete,
    "edgeless": gen_edgeless,
    "path": gen_path,
    "mlr": gen_mlr,
    "mrl": gen_mrl,
    "mplus": gen_mplus,
    "om-r": lambda n: gen_oriented_matching(n, "R"),
    "om-l": lambda n: gen_oriented_matching(n, "L"),
    "om-d": lambda n: gen_oriented_matching(n, "D"),
    "crossing": gen_crossing,
    "asym": lambda n=None: gen_asymmetry_example(),
}


def generate(family: str, n: int | None = None):
    try:
        make = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    if family == "asym":
        return make()
    if n is None:
        raise ValueError(f"family {family!r} needs a size")
    if n < 0:
        raise ValueError("family size must be non-negative")
    return make(n)
