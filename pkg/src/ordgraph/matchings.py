"""Non-intersecting edges, ordered matching subgraphs and double classification.

Two matching notions are kept apart on purpose:

* non-intersecting edges may touch: ``b_i <= a_{i+1}`` (these are what an
  ordered homomorphism from ``M_k`` needs);
* an ordered matching subgraph ``M_k`` needs ``b_i < a_{i+1}`` strictly.

Both maxima come from the earliest-right-endpoint scan used for interval
scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import BoundExceeded, GraphError, OverlappingDoubles
from .graphs import DirectedOrderedGraph, Orientation, OrderedGraph

Double = tuple[int, int]
PairTypeSet = frozenset[str]

PAIR_TYPES = ("LL", "LR", "RL", "RR")
ALL_PAIR_TYPE_SETS: tuple[PairTypeSet, ...] = tuple(
    frozenset(t for i, t in enumerate(PAIR_TYPES) if mask >> i & 1) for mask in range(16)
)
UNIFORM_BOUND = 20


@dataclass(frozen=True)
class MatchingEmbedding:
    """Edges ``(a_1, b_1), (a_2, b_2), ...`` ordered left to right."""

    edges: tuple[Double, ...]
    strict: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        for a, b in self.edges:
            if not a < b:
                raise GraphError(f"matching edge ({a}, {b}) is not written low-high")
        for (_, b), (a, _) in zip(self.edges, self.edges[1:]):
            if b > a or (self.strict and b == a):
                raise GraphError(f"matching edges are not ordered: {self.edges}")

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def count(self) -> int:
        return len(self.edges)

    def vertices(self) -> list[int]:
        return sorted({x for e in self.edges for x in e})

    def is_in(self, g: OrderedGraph) -> bool:
        return all(g.has_edge(a, b) for a, b in self.edges)

    def format(self) -> str:
        return " ".join(["match", *(str(x) for e in self.edges for x in e)])


def _interval_greedy(edges: Iterable[Double], strict: bool) -> tuple[Double, ...]:
    chosen = []
    last = -1
    for a, b in sorted(edges, key=lambda e: (e[1], e[0])):
        if a > last or (not strict and a == last):
            chosen.append((a, b))
            last = b
    return tuple(chosen)


def max_nonintersecting(g: OrderedGraph) -> MatchingEmbedding:
    """Largest set of edges that pairwise do not properly overlap (touching allowed)."""
    return MatchingEmbedding(_interval_greedy(g.edges, strict=False), strict=False)


def max_matching_subgraph(g: OrderedGraph) -> MatchingEmbedding:
    """Largest ordered matching ``M_k`` contained in ``g`` as a subgraph."""
    return MatchingEmbedding(_interval_greedy(g.edges, strict=True), strict=True)


def max_oriented_matching(g: DirectedOrderedGraph, variant: str) -> MatchingEmbedding:
    """Largest ``M^R`` / ``M^L`` / ``M^D`` subgraph of a directed ordered graph.

    ``R`` uses pairs that contain the low->high arc, ``L`` those containing
    the high->low arc, ``D`` only pairs pointing both ways.
    """
    wanted = {
        "R": (Orientation.FORWARD, Orientation.BOTH),
        "L": (Orientation.BACKWARD, Orientation.BOTH),
        "D": (Orientation.BOTH,),
    }[variant]
    return MatchingEmbedding(
        _interval_greedy((p for p, o in g.arcs.items() if o in wanted), strict=True), strict=True
    )


def doubles(g: OrderedGraph) -> list[Double]:
    return [(i, i + 1) for i in range(g.vertex_count - 1) if g.has_edge(i, i + 1)]


def classify_pair(g: OrderedGraph, d1: Double, d2: Double) -> PairTypeSet:
    """Which of the LL, LR, RL, RR edges join double ``d1`` to the later double ``d2``."""
    (l1, r1), (l2, r2) = d1, d2
    if not (l1 < r1 < l2 < r2):
        raise OverlappingDoubles(f"doubles {d1} and {d2} are not disjoint and left-to-right")
    for d in (d1, d2):
        if not g.has_edge(*d):
            raise GraphError(f"{d} is not an edge of the graph")
    found = []
    for name, u, v in (("LL", l1, l2), ("LR", l1, r2), ("RL", r1, l2), ("RR", r1, r2)):
        if g.has_edge(u, v):
            found.append(name)
    return frozenset(found)


def format_types(t: Iterable[str]) -> str:
    t = set(t)
    return "+".join(x for x in PAIR_TYPES if x in t) or "-"


def parse_types(token: str) -> PairTypeSet:
    if token == "-":
        return frozenset()
    parts = token.split("+")
    bad = [p for p in parts if p not in PAIR_TYPES]
    if bad or len(set(parts)) != len(parts):
        raise ValueError(f"bad pair type set {token!r}; use e.g. 'LR+RL' or '-'")
    return frozenset(parts)


def find_uniform_submatching(
    g: OrderedGraph,
    m: MatchingEmbedding,
    size: int,
    bound: int = UNIFORM_BOUND,
) -> tuple[PairTypeSet, MatchingEmbedding] | None:
    """First ``size`` edges of ``m`` (in combination order) that pairwise share one type set.

    This is the monochromatic-clique search on the complete graph whose
    vertices are the doubles of ``m`` and whose edge colours are the 16 type
    sets.  Depth-first with the colour fixed by the first chosen pair, so the
    answer coincides with the first hit of a plain scan over combinations.
    """
    if not m.strict:
        raise GraphError("uniform submatchings need a strict matching (vertex-disjoint doubles)")
    if not m.is_in(g):
        raise GraphError("matching is not contained in the graph")
    ds = list(m.edges)
    k = len(ds)
    if k > bound:
        raise BoundExceeded("matching size", k, bound)
    if size <= 0:
        return frozenset(), MatchingEmbedding((), strict=True)
    if size > k:
        return None
    if size == 1:
        return frozenset(), MatchingEmbedding(ds[:1], strict=True)
    colour = [[None] * k for _ in range(k)]
    for i, j in combinations(range(k), 2):
        colour[i][j] = classify_pair(g, ds[i], ds[j])

    chosen: list[int] = []

    def extend(start: int, t: PairTypeSet | None) -> PairTypeSet | None:
        if len(chosen) == size:
            return t
        for x in range(start, k - (size - len(chosen)) + 1):
            if chosen:
                tt = colour[chosen[0]][x] if t is None else t
                if any(colour[c][x] != tt for c in chosen):
                    continue
            else:
                tt = None
            chosen.append(x)
            found = extend(x + 1, tt)
            if found is not None:
                return found
            chosen.pop()
        return None

    t = extend(0, None)
    if t is None:
        return None
    return t, MatchingEmbedding([ds[i] for i in chosen], strict=True)


def build_uniform_graph(t: Iterable[str], n: int) -> OrderedGraph:
    """``n`` doubles ``(2i, 2i+1)`` with every later pair joined exactly as ``t`` says."""
    if n < 1:
        raise GraphError("need at least one double")
    t = frozenset(t)
    if not t <= set(PAIR_TYPES):
        raise ValueError(f"unknown pair types {sorted(t - set(PAIR_TYPES))}")
    edges = {(2 * i, 2 * i + 1) for i in range(n)}
    for i, j in combinations(range(n), 2):
        a1, b1, a2, b2 = 2 * i, 2 * i + 1, 2 * j, 2 * j + 1
        if "LL" in t:
            edges.add((a1, a2))
        if "LR" in t:
            edges.add((a1, b2))
        if "RL" in t:
            edges.add((b1, a2))
        if "RR" in t:
            edges.add((b1, b2))
    return OrderedGraph(2 * n, frozenset(edges))
