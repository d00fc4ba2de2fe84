"""Ordered chromatic numbers.

The ordered chromatic number is the least number of independent intervals
covering the vertex order.  :func:`greedy_chi` is exact for undirected and
directed graphs; :func:`brute_chi` is an independent check.  Oriented graphs
additionally forbid two blocks from being joined in both directions, which
breaks the greedy; :func:`oriented_chi_exact` searches all interval
partitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundExceeded, GraphError
from .graphs import (
    DirectedOrderedGraph,
    IntervalPartition,
    Orientation,
    OrderedGraph,
    OrientedOrderedGraph,
    quotient,
)

BRUTE_BOUND = 16
ORIENTED_BOUND = 20


@dataclass(frozen=True)
class ColoringResult:
    chi: int
    partition: IntervalPartition
    image: OrderedGraph | DirectedOrderedGraph
    probes: int = field(default=0, compare=False)


@dataclass(frozen=True)
class OrientedColoringResult:
    chi: int
    partition: IntervalPartition
    image: OrientedOrderedGraph


def greedy_chi(g: OrderedGraph) -> ColoringResult:
    """Greedy interval colouring: keep each block open while it stays independent.

    ``probes`` counts adjacency tests, at most ``n*(n-1)/2``.
    """
    n = g.vertex_count
    adj = g.adjacency
    starts = []
    start = 0
    probes = 0
    for v in range(n):
        if v == 0:
            starts.append(0)
            continue
        fits = True
        for u in range(start, v):
            probes += 1
            if adj[v] >> u & 1:
                fits = False
                break
        if not fits:
            start = v
            starts.append(v)
    p = IntervalPartition(n, tuple(starts))
    return ColoringResult(len(p), p, quotient(g, p), probes)


def _greedy_count(adj: list[int], lo: int, n: int) -> int:
    """Number of greedy blocks on the vertices ``lo .. n-1``."""
    count = 0
    start = lo
    for v in range(lo, n):
        if v == lo or adj[v] & (((1 << v) - 1) >> start << start):
            count += 1
            start = v
    return count


def brute_chi(g: OrderedGraph, bound: int = BRUTE_BOUND) -> ColoringResult:
    """Minimum over all ``2^(n-1)`` interval partitions with independent blocks.

    Ties go to the lexicographically least list of block starts.
    """
    n = g.vertex_count
    if n > bound:
        raise BoundExceeded("vertex count", n, bound)
    if n == 0:
        p = IntervalPartition(0, ())
        return ColoringResult(0, p, OrderedGraph(0))
    indep = [[True] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            indep[i][j] = indep[i][j - 1] and not any(g.has_edge(u, j) for u in range(i, j))
    best = None
    for mask in range(1 << (n - 1)):
        starts = (0,) + tuple(i + 1 for i in range(n - 1) if mask >> i & 1)
        ends = starts[1:] + (n,)
        if all(indep[s][e - 1] for s, e in zip(starts, ends)):
            key = (len(starts), starts)
            if best is None or key < best:
                best = key
    p = IntervalPartition(n, best[1])
    return ColoringResult(len(p), p, quotient(g, p))


def directed_chi(g: DirectedOrderedGraph) -> ColoringResult:
    """Chromatic number of a directed ordered graph, which ignores orientation.

    The partition comes from the greedy on the undirected shadow; the image is
    the directed quotient (opposite arcs merging into ``BOTH``).
    """
    base = greedy_chi(g.shadow())
    directed = DirectedOrderedGraph(g.vertex_count, g.arcs)
    return ColoringResult(base.chi, base.partition, quotient(directed, base.partition), base.probes)


def _signed_arcs(g: DirectedOrderedGraph) -> list[tuple[int, int, int]]:
    out = []
    for (u, v), o in g.arcs.items():
        if o is Orientation.BOTH:
            raise GraphError("oriented colouring needs an oriented graph, found a pair pointing both ways")
        out.append((u, v, 1 if o is Orientation.FORWARD else -1))
    return out


def oriented_valid(g: OrientedOrderedGraph, labels) -> bool:
    """True iff the block labelling collapses without loops or antiparallel pairs."""
    seen: dict[tuple[int, int], int] = {}
    for u, v, s in _signed_arcs(g):
        bu, bv = labels[u], labels[v]
        if bu == bv:
            return False
        if bu > bv:
            bu, bv, s = bv, bu, -s
        if seen.setdefault((bu, bv), s) != s:
            return False
    return True


def _oriented_result(g: OrientedOrderedGraph, p: IntervalPartition) -> OrientedColoringResult:
    return OrientedColoringResult(len(p), p, quotient(g, p))


def _mirror(g: OrientedOrderedGraph) -> OrientedOrderedGraph:
    n = g.vertex_count
    # reversing the order turns a low->high arc into a high->low one
    return OrientedOrderedGraph(n, {(n - 1 - v, n - 1 - u): o.reversed() for (u, v), o in g.arcs.items()})


def _greedy_left(g: OrientedOrderedGraph, lookahead: bool) -> list[int]:
    n = g.vertex_count
    adj = g.shadow().adjacency
    labels = list(range(n))  # unscanned vertices stay singletons
    block_start = 0
    current = -1
    for v in range(n):
        if v > 0 and not adj[v] & (((1 << v) - 1) >> block_start << block_start):
            labels[v] = current
            if _greedy_ok(g, labels, v, lookahead):
                continue
        current += 1
        block_start = v
        labels[v] = current
        if not _greedy_ok(g, labels, v, lookahead):
            raise GraphError(f"greedy is stuck at vertex {v}: no block can take it without an antiparallel pair")
    return labels


def _greedy_ok(g: OrientedOrderedGraph, labels: list[int], v: int, lookahead: bool) -> bool:
    n = g.vertex_count
    if lookahead:
        view = [labels[x] if x <= v else n + x for x in range(n)]
        return oriented_valid(g, view)
    prefix = OrientedOrderedGraph(v + 1, {pair: o for pair, o in g.arcs.items() if pair[1] <= v})
    return oriented_valid(prefix, labels[: v + 1])


def oriented_chi_greedy(
    g: OrientedOrderedGraph, direction: str = "left", lookahead: bool = True
) -> OrientedColoringResult:
    """One-pass greedy for oriented graphs, scanning from the left or the right.

    A vertex joins the open block when the block stays independent and the
    quotient stays free of antiparallel pairs.  With ``lookahead`` the
    quotient is the one where every unscanned vertex is still a singleton,
    which always leaves a legal move; without it only arcs among scanned
    vertices count, and the scan can get stuck (``GraphError``).
    """
    if direction not in ("left", "right"):
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    n = g.vertex_count
    if n == 0:
        return OrientedColoringResult(0, IntervalPartition(0, ()), OrientedOrderedGraph(0))
    if direction == "left":
        labels = _greedy_left(g, lookahead)
    else:
        mirrored = _greedy_left(_mirror(g), lookahead)
        top = mirrored[-1]
        labels = [top - mirrored[n - 1 - v] for v in range(n)]
    return _oriented_result(g, IntervalPartition.from_labels(labels))


def oriented_chi_exact(g: OrientedOrderedGraph, bound: int = ORIENTED_BOUND) -> OrientedColoringResult:
    """Smallest interval partition whose quotient is a valid oriented graph.

    Depth-first over block ends for each candidate block count in turn,
    pruning a prefix as soon as its blocks conflict; ties go to the
    lexicographically least list of block starts.
    """
    n = g.vertex_count
    if n > bound:
        raise BoundExceeded("vertex count", n, bound)
    if n == 0:
        return OrientedColoringResult(0, IntervalPartition(0, ()), OrientedOrderedGraph(0))
    shadow = g.shadow()
    adj = shadow.adjacency
    back: list[list[tuple[int, int]]] = [[] for _ in range(n)]  # (earlier vertex, sign seen from it)
    for u, v, s in _signed_arcs(g):
        back[v].append((u, s))
    # any oriented colouring is also an interval colouring of every suffix
    suffix_chi = [_greedy_count(adj, e, n) for e in range(n + 1)]

    labels = [0] * n
    dirs: dict[tuple[int, int], int] = {}
    starts: list[int] = []

    def place(s: int, b: int, k: int) -> bool:
        """Place block ``b`` starting at ``s``; ``k`` blocks in total."""
        starts.append(s)
        added: list[tuple[int, int]] = []
        ok = False
        e = s
        while e < n:
            # grow the block to [s, e]
            if adj[e] & (((1 << e) - 1) >> s << s):
                break
            labels[e] = b
            clash = False
            for u, sign in back[e]:
                key = (labels[u], b)
                old = dirs.get(key)
                if old is None:
                    dirs[key] = sign
                    added.append(key)
                elif old != sign:
                    clash = True
                    break
            if clash:
                break
            e += 1
            remaining = k - b - 1
            if e == n:
                if remaining == 0:
                    ok = True
                    break
            elif remaining >= 1 and b + 1 + suffix_chi[e] <= k and n - e >= remaining:
                # defer the deeper search: smaller next start is lexicographically first
                if place(e, b + 1, k):
                    ok = True
                    break
        if not ok:
            for key in added:
                del dirs[key]
            starts.pop()
        return ok

    for k in range(max(1, suffix_chi[0]), n + 1):
        if place(0, 0, k):
            return _oriented_result(g, IntervalPartition(n, tuple(starts)))
    raise AssertionError("the all-singletons partition is always valid")
