"""Ordered homomorphisms, order-preserving embeddings and cores.

A homomorphism is a non-decreasing vertex map sending edges to edges; an
embedding is a strictly increasing one (optionally also sending non-edges to
non-edges).  Both searches assign source vertices left to right and try
target values in increasing order, so the first witness found is the
lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .graphs import OrderedGraph

MonotoneMap = tuple[int, ...]
Embedding = tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a witness check; falsy when the witness is rejected."""

    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_shape(g: OrderedGraph, h: OrderedGraph, f: Sequence[int]) -> None:
    if len(f) != g.vertex_count:
        raise ValueError(f"map has length {len(f)}, source has {g.vertex_count} vertices")
    for x in f:
        if not 0 <= x < h.vertex_count:
            raise ValueError(f"map value {x} outside target range 0..{h.vertex_count - 1}")


def check_hom(g: OrderedGraph, h: OrderedGraph, f: Sequence[int]) -> Verdict:
    """Validate ``f`` as an ordered homomorphism ``g -> h``.

    Length or range mismatches raise ``ValueError``; they are usage errors,
    not evidence about the homomorphism.
    """
    _check_shape(g, h, f)
    for u in range(g.vertex_count - 1):
        if f[u] > f[u + 1]:
            return Verdict(False, f"order violated at {u}: {f[u]} > {f[u + 1]}")
    for u, v in g.sorted_edges():
        if not h.has_edge(f[u], f[v]):
            return Verdict(False, f"edge {u}-{v} maps to non-edge {f[u]}-{f[v]}")
    return Verdict(True)


def check_embedding(f: OrderedGraph, g: OrderedGraph, image: Sequence[int], induced: bool = False) -> Verdict:
    _check_shape(f, g, image)
    for i in range(len(image) - 1):
        if image[i] >= image[i + 1]:
            return Verdict(False, f"not strictly increasing at {i}")
    for u, v in combinations(range(f.vertex_count), 2):
        here, there = f.has_edge(u, v), g.has_edge(image[u], image[v])
        if here and not there:
            return Verdict(False, f"edge {u}-{v} maps to non-edge {image[u]}-{image[v]}")
        if induced and there and not here:
            return Verdict(False, f"non-edge {u}-{v} maps to edge {image[u]}-{image[v]}")
    return Verdict(True)


def _bits_from(mask: int, lo: int):
    mask >>= lo
    x = lo
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


def find_hom(
    g: OrderedGraph,
    h: OrderedGraph,
    fixed: Mapping[int, int] | None = None,
) -> MonotoneMap | None:
    """Lexicographically least ordered homomorphism ``g -> h``, or ``None``.

    ``fixed`` pins chosen source vertices to given targets (used for
    retractions).
    """
    n, m = g.vertex_count, h.vertex_count
    if n == 0:
        return ()
    if m == 0:
        return None
    full = (1 << m) - 1
    gadj, hadj = g.adjacency, h.adjacency
    back = [gadj[v] & ((1 << v) - 1) for v in range(n)]
    ahead = [gadj[v] >> (v + 1) << (v + 1) for v in range(n)]
    allowed = [full] * n
    if fixed:
        for v, x in fixed.items():
            allowed[v] &= 1 << x
    f = [0] * n

    def viable(v: int, x: int) -> bool:
        # every later neighbour w of v must keep a value >= x compatible with
        # all of its neighbours assigned so far (0..v)
        later = ahead[v]
        w = v + 1
        later >>= w
        while later:
            if later & 1 and not candidates_upto(w, x, v):
                return False
            later >>= 1
            w += 1
        return True

    def candidates_upto(w: int, lo: int, last: int) -> int:
        mask = allowed[w] & (full >> lo << lo)
        nb = back[w] & ((1 << (last + 1)) - 1)
        u = 0
        while nb and mask:
            if nb & 1:
                mask &= hadj[f[u]]
            nb >>= 1
            u += 1
        return mask

    def extend(v: int, lo: int) -> bool:
        if v == n:
            return True
        for x in _bits_from(candidates_upto(v, lo, v - 1), lo):
            f[v] = x
            if viable(v, x) and extend(v + 1, x):
                return True
        return False

    return tuple(f) if extend(0, 0) else None


def find_embedding(f: OrderedGraph, g: OrderedGraph, induced: bool = False) -> Embedding | None:
    """Lexicographically least strictly increasing copy of ``f`` in ``g``."""
    k, m = f.vertex_count, g.vertex_count
    if k > m:
        return None
    if k == 0:
        return ()
    fadj, gadj = f.adjacency, g.adjacency
    image = [0] * k

    def extend(v: int, lo: int) -> bool:
        if v == k:
            return True
        mask = ((1 << (m - (k - v) + 1)) - 1) >> lo << lo
        for u in range(v):
            if fadj[v] >> u & 1:
                mask &= gadj[image[u]]
            elif induced:
                mask &= ~gadj[image[u]]
            if not mask:
                return False
        for x in _bits_from(mask, lo):
            image[v] = x
            if extend(v + 1, x + 1):
                return True
        return False

    return tuple(image) if extend(0, 0) else None


def compose(f: Sequence[int], g: Sequence[int]) -> MonotoneMap:
    """``g after f``: first apply ``f``, then ``g``."""
    return tuple(g[x] for x in f)


@dataclass(frozen=True)
class CoreResult:
    core: OrderedGraph
    vertices: tuple[int, ...]  # vertices of the input kept by the core
    retraction: MonotoneMap  # input -> core (core indices)


def compute_core(g: OrderedGraph) -> CoreResult:
    """Smallest retract of ``g``.

    Vertex subsets are tried by increasing size, then lexicographically; a
    subset ``S`` is accepted when some homomorphism ``g -> g[S]`` fixes every
    vertex of ``S``.  A retract is hom-equivalent to ``g``, so no subset below
    the chromatic number can work and those sizes are skipped.
    """
    from .coloring import greedy_chi

    n = g.vertex_count
    for size in range(greedy_chi(g).chi, n + 1):
        for subset in combinations(range(n), size):
            target = g.induced(subset)
            r = find_hom(g, target, fixed={v: i for i, v in enumerate(subset)})
            if r is not None:
                return CoreResult(target, subset, r)
    raise AssertionError("the identity retraction always exists")


def is_core(g: OrderedGraph) -> bool:
    return compute_core(g).core.vertex_count == g.vertex_count


def hom_equivalent(g: OrderedGraph, h: OrderedGraph) -> bool:
    return find_hom(g, h) is not None and find_hom(h, g) is not None
