from __future__ import annotations

import random
import sys
from itertools import combinations

import pytest
from hypothesis import strategies as st

from ordgraph.graphs import DirectedOrderedGraph, Orientation, OrderedGraph, OrientedOrderedGraph


def random_graph(rng: random.Random, n: int, p: float) -> OrderedGraph:
    return OrderedGraph(n, frozenset(e for e in combinations(range(n), 2) if rng.random() < p))


def random_orientation(rng: random.Random, g: OrderedGraph, allow_both: bool = True):
    choices = [Orientation.FORWARD, Orientation.BACKWARD]
    if allow_both:
        choices.append(Orientation.BOTH)
    arcs = {e: rng.choice(choices) for e in g.edges}
    cls = DirectedOrderedGraph if allow_both else OrientedOrderedGraph
    return cls(g.vertex_count, arcs)


@st.composite
def ordered_graphs(draw, max_n: int = 7, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return OrderedGraph(n, frozenset(p for p, c in zip(pairs, chosen) if c))


@st.composite
def oriented_graphs(draw, max_n: int = 6):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    digits = draw(st.lists(st.integers(0, 2), min_size=len(pairs), max_size=len(pairs)))
    ors = (None, Orientation.FORWARD, Orientation.BACKWARD)
    return OrientedOrderedGraph(n, {p: ors[d] for p, d in zip(pairs, digits) if d})


@pytest.fixture
def rng():
    return random.Random(20231014)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
