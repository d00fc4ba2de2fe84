"""Line-oriented text format for ordered graphs.

::

    ordgraph 1
    kind undirected|directed|oriented
    n <vertex_count>
    e <u> <v>      undirected edge
    a <u> <v>      arc u -> v
    d <u> <v>      arc in both directions (directed kind only)

``#`` starts a comment line.  The ``ordgraph`` and ``kind`` header lines may
be omitted when reading; the kind is then inferred from the edge keywords.
Output is canonical: full header, pairs sorted, single spaces, trailing newline.
"""

from __future__ import annotations

import sys

from .errors import ParseError
from .graphs import (
    DirectedOrderedGraph,
    Orientation,
    OrderedGraph,
    OrientedOrderedGraph,
)

MAGIC = "ordgraph"
VERSION = "1"
KINDS = {
    "undirected": OrderedGraph,
    "directed": DirectedOrderedGraph,
    "oriented": OrientedOrderedGraph,
}


def kind_of(g) -> str:
    if isinstance(g, OrientedOrderedGraph):
        return "oriented"
    if isinstance(g, DirectedOrderedGraph):
        return "directed"
    return "undirected"


def _int(token: str, lineno: int | None) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative value {value}", lineno)
    return value


def parse(text: str):
    """Parse graph-file text into the matching graph type."""
    kind = None
    n = None
    # (keyword, u, v, lineno)
    items: list[tuple[str, int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        key = tokens[0]
        if key == MAGIC:
            if n is not None or kind is not None or items:
                raise ParseError("header line after graph data", lineno)
            if len(tokens) != 2 or tokens[1] != VERSION:
                raise ParseError(f"unsupported header {line!r}", lineno)
        elif key == "kind":
            if kind is not None or n is not None:
                raise ParseError("misplaced or repeated kind line", lineno)
            if len(tokens) != 2 or tokens[1] not in KINDS:
                raise ParseError(f"unknown kind {line!r}", lineno)
            kind = tokens[1]
        elif key == "n":
            if n is not None:
                raise ParseError("repeated vertex count line", lineno)
            if len(tokens) != 2:
                raise ParseError(f"malformed vertex count line {line!r}", lineno)
            n = _int(tokens[1], lineno)
        elif key in ("e", "a", "d"):
            if n is None:
                raise ParseError("edge line before the vertex count line", lineno)
            if len(tokens) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            u, v = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if u >= n or v >= n:
                raise ParseError(f"vertex out of range 0..{n - 1} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            items.append((key, u, v, lineno))
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno)
    if n is None:
        raise ParseError("missing vertex count line 'n <count>'")

    keys = {item[0] for item in items}
    if kind is None:
        if "e" in keys and keys & {"a", "d"}:
            raise ParseError("cannot mix 'e' lines with 'a'/'d' lines")
        kind = "directed" if "d" in keys else ("oriented" if "a" in keys else "undirected")

    seen: dict[tuple[int, int], int] = {}
    arcs: dict[tuple[int, int], Orientation] = {}
    for key, u, v, lineno in items:
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise ParseError(f"duplicate edge {u}-{v} (first given on line {seen[pair]})", lineno)
        seen[pair] = lineno
        if kind == "undirected":
            if key != "e":
                raise ParseError(f"'{key}' line in an undirected graph", lineno)
            if u > v:
                raise ParseError(f"undirected edge must be written with u < v, got {u} {v}", lineno)
        elif key == "e":
            raise ParseError(f"'e' line in a {kind} graph", lineno)
        elif key == "d":
            if kind == "oriented":
                raise ParseError("arc in both directions in an oriented graph", lineno)
            arcs[pair] = Orientation.BOTH
        else:
            arcs[pair] = Orientation.FORWARD if u < v else Orientation.BACKWARD
    if kind == "undirected":
        return OrderedGraph(n, frozenset(seen))
    return KINDS[kind](n, arcs)


def serialize(g) -> str:
    kind = kind_of(g)
    lines = [f"{MAGIC} {VERSION}", f"kind {kind}", f"n {g.vertex_count}"]
    if kind == "undirected":
        lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    else:
        for (u, v), o in g.arcs.items():
            if o is Orientation.FORWARD:
                lines.append(f"a {u} {v}")
            elif o is Orientation.BACKWARD:
                lines.append(f"a {v} {u}")
            else:
                lines.append(f"d {u} {v}")
    return "\n".join(lines) + "\n"


def read_graph(path: str):
    """Read a graph file; ``-`` reads standard input."""
    if path == "-":
        return parse(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_graph(g, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(g))


def format_map(image) -> str:
    return " ".join(["map", *map(str, image)])


def format_embedding(image) -> str:
    return " ".join(["emb", *map(str, image)])


def to_json(g) -> dict:
    """JSON-ready description; inverse of :func:`from_json`."""
    kind = kind_of(g)
    out = {"kind": kind, "n": g.vertex_count}
    if kind == "undirected":
        out["edges"] = [list(e) for e in g.sorted_edges()]
    else:
        out["arcs"] = [
            [u, v] if o is Orientation.FORWARD else [v, u]
            for (u, v), o in g.arcs.items()
            if o is not Orientation.BOTH
        ]
        out["doubles"] = [list(p) for p, o in g.arcs.items() if o is Orientation.BOTH]
    return out


def from_json(data: dict):
    kind = data.get("kind", "undirected")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}")
    n = data["n"]
    if kind == "undirected":
        return OrderedGraph.from_edges(n, data.get("edges", []))
    return KINDS[kind].from_arcs(n, data.get("arcs", []), data.get("doubles", []))
