"""Bounded exhaustive checks of homomorphism dualities ``F -/-> G  <=>  G -> D``.

Every labelled ordered graph up to a vertex bound is enumerated (not only
cores: each graph is hom-equivalent to its core, so this is a stronger
check).  Work can be split over processes; reports merge by adding counts
and concatenating violations in enumeration order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .coloring import greedy_chi
from .errors import BoundExceeded
from .families import gen_complete, gen_matching
from .graphs import (
    OrderedGraph,
    count_ordered_graphs,
    enumerate_ordered_graphs,
    ordered_graph_from_index,
    pair_list,
)
from .homomorphism import compute_core, find_hom
from .matchings import max_nonintersecting

DUALITY_BOUND = 7
BOTH_HOLD = "both-hold"
NEITHER_HOLDS = "neither-holds"
CHUNK = 4096


@dataclass
class Violation:
    graph: OrderedGraph
    direction: str
    index: int  # position in the binary-counter enumeration for its vertex count


@dataclass
class DualityReport:
    k: int
    max_n: int
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    # graphs where "M_k does not map to G" disagrees with "fewer than k non-intersecting edges"
    matching_mismatches: list[Violation] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def merge(self, other: DualityReport) -> DualityReport:
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.matching_mismatches.extend(other.matching_mismatches)
        return self


def expected_count(max_n: int) -> int:
    return sum(count_ordered_graphs(n) for n in range(max_n + 1))


def pair_direction(f: OrderedGraph, d: OrderedGraph, g: OrderedGraph) -> str | None:
    """How ``g`` breaks the duality ``(f, d)``, or ``None`` if it does not.

    ``both-hold``: ``f -> g`` and ``g -> d``; ``neither-holds``: neither.
    """
    f_maps = find_hom(f, g) is not None
    to_d = find_hom(g, d) is not None
    if f_maps and to_d:
        return BOTH_HOLD
    if not f_maps and not to_d:
        return NEITHER_HOLDS
    return None


def _duality_chunk(k: int, n: int, start: int, stop: int) -> DualityReport:
    report = DualityReport(k, n)
    mk = gen_matching(k)
    pairs = pair_list(n)
    for index in range(start, stop):
        g = ordered_graph_from_index(n, index, pairs)
        report.checked += 1
        blocked = find_hom(mk, g) is None
        colourable = greedy_chi(g).chi <= k
        if blocked != colourable:
            direction = NEITHER_HOLDS if blocked else BOTH_HOLD
            report.violations.append(Violation(g, direction, index))
        if blocked != (max_nonintersecting(g).count < k):
            report.matching_mismatches.append(Violation(g, "matching", index))
    return report


def _chunks(max_n: int):
    for n in range(max_n + 1):
        total = count_ordered_graphs(n)
        for start in range(0, total, CHUNK):
            yield n, start, min(total, start + CHUNK)


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("ORDGRAPH_WORKERS", "1") or 1)
    return max(1, workers)


def verify_duality(
    k: int, max_n: int, workers: int | None = 1, bound: int = DUALITY_BOUND, progress=None
) -> DualityReport:
    """Check ``M_k -/-> G  <=>  chi(G) <= k`` on every ordered graph with at most ``max_n`` vertices."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if max_n > bound:
        raise BoundExceeded("max_n", max_n, bound)
    report = DualityReport(k, max_n)
    chunks = list(_chunks(max_n))
    workers = resolve_workers(workers)
    if workers == 1:
        parts = (_duality_chunk(k, *c) for c in chunks)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        parts = pool.map(_duality_chunk, *zip(*[(k, *c) for c in chunks]))
    try:
        for c, part in zip(chunks, parts):
            report.merge(part)
            if progress is not None:
                progress(c[0], report.checked)
    finally:
        if workers != 1:
            pool.shutdown()
    return report


@dataclass
class PairCandidateReport:
    f: OrderedGraph
    d: OrderedGraph
    max_n: int
    checked: int
    counterexample: OrderedGraph | None = None
    direction: str | None = None

    @property
    def confirmed(self) -> bool:
        """No counterexample up to the bound."""
        return self.counterexample is None

    def revalidate(self) -> bool:
        if self.counterexample is None:
            return True
        return pair_direction(self.f, self.d, self.counterexample) == self.direction


def refute_pair(f: OrderedGraph, d: OrderedGraph, max_n: int, bound: int = DUALITY_BOUND) -> PairCandidateReport:
    """First enumerated graph ``g`` with ``(f -/-> g) != (g -> d)``."""
    if max_n > bound:
        raise BoundExceeded("max_n", max_n, bound)
    checked = 0
    for n in range(max_n + 1):
        for g in enumerate_ordered_graphs(n):
            checked += 1
            direction = pair_direction(f, d, g)
            if direction is not None:
                return PairCandidateReport(f, d, max_n, checked, g, direction)
    return PairCandidateReport(f, d, max_n, checked)


def is_matching_complete_pair(f: OrderedGraph, d: OrderedGraph) -> bool:
    """True when ``(f, d)`` is hom-equivalent to ``(M_k, K_k)`` for some ``k >= 1``."""
    cd = compute_core(d).core
    k = cd.vertex_count
    if k < 1 or cd != gen_complete(k):
        return False
    return compute_core(f).core == gen_matching(k)


def small_graphs(max_size: int, min_size: int = 1):
    for n in range(min_size, max_size + 1):
        yield from enumerate_ordered_graphs(n)


def refute_small_pairs(max_size: int = 3, max_n: int = 4):
    """Try to refute every candidate pair on ``1..max_size`` vertices.

    Returns ``(reports, excepted)``: one report per candidate pair, and the
    pairs skipped because they are hom-equivalent to ``(M_k, K_k)``.
    """
    graphs = list(small_graphs(max_size))
    reports, excepted = [], []
    for f, d in product(graphs, graphs):
        if is_matching_complete_pair(f, d):
            excepted.append((f, d))
        else:
            reports.append(refute_pair(f, d, max_n))
    return reports, excepted
