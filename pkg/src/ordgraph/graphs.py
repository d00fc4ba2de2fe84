"""Ordered graph value types, interval partitions, quotients and enumeration.

Vertices are always ``0 .. n-1`` and the vertex order is the integer order,
so an interval of the ordering is a contiguous index range.  Edges and arcs
are stored on normalised pairs ``(u, v)`` with ``u < v``; arcs carry an
:class:`Orientation` tag saying which way(s) they point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import AntiparallelConflict, GraphError, NonIndependentBlock

Edge = tuple[int, int]


class Orientation(enum.Enum):
    FORWARD = "forward"  # low -> high
    BACKWARD = "backward"  # high -> low
    BOTH = "both"

    def reversed(self) -> Orientation:
        if self is Orientation.FORWARD:
            return Orientation.BACKWARD
        if self is Orientation.BACKWARD:
            return Orientation.FORWARD
        return self


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
    if u == v:
        raise GraphError(f"loop at vertex {u}")


@dataclass(frozen=True)
class OrderedGraph:
    """Undirected loop-free graph on the ordered vertex set ``0 .. n-1``."""

    vertex_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        n = self.vertex_count
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
        normal = set()
        for u, v in self.edges:
            _check_pair(n, u, v)
            normal.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normal))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> OrderedGraph:
        return cls(n, frozenset((int(u), int(v)) for u, v in edges))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood of every vertex as a bitmask."""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adjacency[v]
        return [u for u in range(self.vertex_count) if mask >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")

    def induced(self, vertices: Sequence[int]) -> OrderedGraph:
        """Induced subgraph on ``vertices`` (relabelled by their order)."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        if len(index) != len(vs):
            raise GraphError("induced subgraph vertices must be distinct")
        return OrderedGraph(
            len(vs),
            frozenset((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def shadow(self) -> OrderedGraph:
        return self

    def __repr__(self) -> str:
        return f"OrderedGraph({self.vertex_count}, {self.sorted_edges()})"


@dataclass(frozen=True, eq=False)
class DirectedOrderedGraph:
    """Ordered graph whose edges carry one or both directions."""

    vertex_count: int
    arcs: Mapping[Edge, Orientation] = field(default_factory=dict)

    allow_both = True

    def __post_init__(self) -> None:
        n = self.vertex_count
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
        normal: dict[Edge, Orientation] = {}
        for (u, v), o in self.arcs.items():
            _check_pair(n, u, v)
            o = Orientation(o)
            if u > v:
                u, v, o = v, u, o.reversed()
            if (u, v) in normal:
                raise GraphError(f"pair {u}-{v} given twice")
            if o is Orientation.BOTH and not self.allow_both:
                raise GraphError(f"pair {u}-{v} is oriented both ways in an oriented graph")
            normal[(u, v)] = o
        object.__setattr__(self, "arcs", dict(sorted(normal.items())))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]] = (), doubles: Iterable[Sequence[int]] = ()):
        """Build from directed pairs ``(tail, head)``; a pair given both ways becomes ``BOTH``."""
        merged: dict[Edge, Orientation] = {}

        def put(key: Edge, o: Orientation) -> None:
            old = merged.get(key)
            merged[key] = o if old is None or old is o else Orientation.BOTH

        for t, h in arcs:
            t, h = int(t), int(h)
            if t < h:
                put((t, h), Orientation.FORWARD)
            else:
                put((h, t), Orientation.BACKWARD)
        for u, v in doubles:
            put((min(u, v), max(u, v)), Orientation.BOTH)
        return cls(n, merged)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.vertex_count, frozenset(self.arcs.items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.vertex_count}, {self.arc_list()})"

    def arc_list(self) -> list[Edge]:
        """Directed arcs ``(tail, head)``; a ``BOTH`` pair yields two arcs."""
        out = []
        for (u, v), o in self.arcs.items():
            if o is not Orientation.BACKWARD:
                out.append((u, v))
            if o is not Orientation.FORWARD:
                out.append((v, u))
        return out

    def orientation(self, u: int, v: int) -> Orientation | None:
        """Orientation of the pair as seen from ``u`` towards ``v``."""
        if u < v:
            return self.arcs.get((u, v))
        o = self.arcs.get((v, u))
        return None if o is None else o.reversed()

    def shadow(self) -> OrderedGraph:
        return OrderedGraph(self.vertex_count, frozenset(self.arcs))

    def degree(self, v: int) -> int:
        return sum(1 for pair in self.arcs if v in pair)

    def with_orientation(self, arcs: Mapping[Edge, Orientation]):
        return type(self)(self.vertex_count, arcs)


@dataclass(frozen=True, eq=False, repr=False)
class OrientedOrderedGraph(DirectedOrderedGraph):
    """Directed ordered graph in which no pair points both ways."""

    allow_both = False


AnyGraph = OrderedGraph | DirectedOrderedGraph


@dataclass(frozen=True)
class IntervalPartition:
    """Split of ``0 .. n-1`` into consecutive non-empty blocks.

    ``boundaries`` holds the first vertex of every block, so it starts with 0
    whenever ``n > 0`` and its length is the number of blocks.
    """

    vertex_count: int
    boundaries: tuple[int, ...]

    def __post_init__(self) -> None:
        b = tuple(int(x) for x in self.boundaries)
        object.__setattr__(self, "boundaries", b)
        n = self.vertex_count
        if n == 0:
            if b:
                raise GraphError("the empty vertex set has no blocks")
            return
        if not b or b[0] != 0:
            raise GraphError("the first block must start at vertex 0")
        if any(x >= y for x, y in zip(b, b[1:])) or b[-1] >= n:
            raise GraphError(f"block starts {list(b)} are not strictly increasing within 0..{n - 1}")

    @classmethod
    def singletons(cls, n: int) -> IntervalPartition:
        return cls(n, tuple(range(n)))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> IntervalPartition:
        """Partition from a non-decreasing block label per vertex."""
        starts = [i for i in range(len(labels)) if i == 0 or labels[i] != labels[i - 1]]
        return cls(len(labels), tuple(starts))

    def __len__(self) -> int:
        return len(self.boundaries)

    def blocks(self) -> list[range]:
        ends = self.boundaries[1:] + (self.vertex_count,)
        return [range(s, e) for s, e in zip(self.boundaries, ends)]

    def labels(self) -> list[int]:
        out = []
        for i, block in enumerate(self.blocks()):
            out.extend([i] * len(block))
        return out


def quotient(g, p: IntervalPartition):
    """Collapse every block of ``p`` to a single vertex.

    Returns a graph of the same kind as ``g``.  Raises
    :class:`NonIndependentBlock` if a block contains an edge and, for oriented
    graphs, :class:`AntiparallelConflict` if two blocks would be joined in both
    directions.  Directed graphs merge opposite arcs into ``BOTH``.
    """
    if p.vertex_count != g.vertex_count:
        raise GraphError(f"partition covers {p.vertex_count} vertices, graph has {g.vertex_count}")
    label = p.labels()
    k = len(p)
    if isinstance(g, OrderedGraph):
        edges = set()
        for u, v in g.sorted_edges():
            if label[u] == label[v]:
                raise NonIndependentBlock(label[u], (u, v))
            edges.add((label[u], label[v]))
        return OrderedGraph(k, frozenset(edges))
    merged: dict[Edge, Orientation] = {}
    for (u, v), o in g.arcs.items():
        bu, bv = label[u], label[v]
        if bu == bv:
            raise NonIndependentBlock(bu, (u, v))
        old = merged.get((bu, bv))
        if old is None or old is o:
            merged[(bu, bv)] = o
        elif isinstance(g, OrientedOrderedGraph):
            raise AntiparallelConflict(bu, bv)
        else:
            merged[(bu, bv)] = Orientation.BOTH
    return type(g)(k, merged)


def pair_list(n: int) -> list[Edge]:
    """All vertex pairs in lexicographic order; bit/digit ``i`` of an index refers to pair ``i``."""
    return list(combinations(range(n), 2))


def ordered_graph_from_index(n: int, index: int, pairs: Sequence[Edge] | None = None) -> OrderedGraph:
    pairs = pair_list(n) if pairs is None else pairs
    return OrderedGraph(n, frozenset(e for i, e in enumerate(pairs) if index >> i & 1))


def count_ordered_graphs(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_ordered_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[OrderedGraph]:
    """Every labelled ordered graph on ``n`` vertices, ordered by binary counter.

    Bit ``i`` of the counter selects the ``i``-th pair in lexicographic order.
    ``start``/``stop`` restrict to a slice of the counter range so independent
    workers can split the space.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    pairs = pair_list(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    for index in range(start, stop):
        yield ordered_graph_from_index(n, index, pairs)


_ORIENTED_DIGITS = (None, Orientation.FORWARD, Orientation.BACKWARD)
_DIRECTED_DIGITS = (None, Orientation.FORWARD, Orientation.BACKWARD, Orientation.BOTH)


def _enumerate_arc_graphs(n: int, digits, cls) -> Iterator:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    pairs = pair_list(n)
    base = len(digits)
    for index in range(base ** len(pairs)):
        arcs = {}
        rest = index
        for pair in pairs:
            rest, d = divmod(rest, base)
            if digits[d] is not None:
                arcs[pair] = digits[d]
        yield cls(n, arcs)


def enumerate_oriented_graphs(n: int) -> Iterator[OrientedOrderedGraph]:
    """All ``3^C(n,2)`` oriented graphs; base-3 counter, digit ``i`` = pair ``i`` (absent/forward/backward)."""
    return _enumerate_arc_graphs(n, _ORIENTED_DIGITS, OrientedOrderedGraph)


def enumerate_directed_graphs(n: int) -> Iterator[DirectedOrderedGraph]:
    """All ``4^C(n,2)`` directed graphs; digit 3 is a pair oriented both ways."""
    return _enumerate_arc_graphs(n, _DIRECTED_DIGITS, DirectedOrderedGraph)
