"""Command-line entry point: ``ordgraph <subcommand> ...``.

Exit status is 0 on success, 1 when a checked property fails (a duality
counterexample), 2 on usage, parse or file errors.  ``--json`` switches any
subcommand to a single JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .coloring import (
    brute_chi,
    directed_chi,
    greedy_chi,
    oriented_chi_exact,
    oriented_chi_greedy,
)
from .duality import refute_pair, resolve_workers, verify_duality
from .errors import GraphError
from .families import FAMILIES, generate
from .fileformat import format_embedding, format_map, kind_of, read_graph, serialize, to_json
from .graphs import (
    DirectedOrderedGraph,
    OrderedGraph,
    OrientedOrderedGraph,
    count_ordered_graphs,
    enumerate_directed_graphs,
    enumerate_ordered_graphs,
    enumerate_oriented_graphs,
)
from .homomorphism import compute_core, find_embedding, find_hom
from .matchings import (
    build_uniform_graph,
    classify_pair,
    doubles,
    find_uniform_submatching,
    format_types,
    max_matching_subgraph,
    max_nonintersecting,
    parse_types,
)

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one-line diagnostics instead of argparse's usage dump
        raise UsageError(message)


def _undirected(path: str) -> OrderedGraph:
    g = read_graph(path)
    if not isinstance(g, OrderedGraph):
        raise GraphError(f"{path}: expected an undirected graph, got a {kind_of(g)} one")
    return g


def _oriented(path: str) -> OrientedOrderedGraph:
    g = read_graph(path)
    if isinstance(g, OrderedGraph):
        raise GraphError(f"{path}: expected an oriented graph, got an undirected one")
    if not isinstance(g, OrientedOrderedGraph):
        g = OrientedOrderedGraph(g.vertex_count, g.arcs)
    return g


def _coloring_payload(res) -> tuple[str, dict]:
    text = f"chi {res.chi}\n" + " ".join(["blocks", *map(str, res.partition.boundaries)]) + "\n"
    text += serialize(res.image)
    data = {"chi": res.chi, "blocks": list(res.partition.boundaries), "image": to_json(res.image)}
    return text, data


def cmd_gen(args):
    g = generate(args.family, args.n)
    return serialize(g), {"graph": to_json(g)}, 0


def cmd_chi(args):
    g = read_graph(args.graph)
    if isinstance(g, DirectedOrderedGraph):
        res = directed_chi(g)
        if args.method == "brute" and brute_chi(g.shadow()).chi != res.chi:
            raise AssertionError("directed colouring disagrees with the brute-force shadow colouring")
    else:
        res = brute_chi(g) if args.method == "brute" else greedy_chi(g)
    text, data = _coloring_payload(res)
    return text, data, 0


def cmd_oriented_chi(args):
    g = _oriented(args.graph)
    if args.method == "exact":
        res = oriented_chi_exact(g)
    else:
        res = oriented_chi_greedy(g, args.method.split("-")[1])
    text, data = _coloring_payload(res)
    data["method"] = args.method
    return text, data, 0


def cmd_hom(args):
    g, h = _undirected(args.source), _undirected(args.target)
    f = find_hom(g, h)
    if f is None:
        return "none\n", {"map": None}, 0
    return format_map(f) + "\n", {"map": list(f)}, 0


def cmd_embed(args):
    f, g = _undirected(args.pattern), _undirected(args.host)
    e = find_embedding(f, g, induced=args.induced)
    if e is None:
        return "none\n", {"embedding": None, "induced": args.induced}, 0
    return format_embedding(e) + "\n", {"embedding": list(e), "induced": args.induced}, 0


def cmd_core(args):
    g = _undirected(args.graph)
    res = compute_core(g)
    text = (
        f"core {res.core.vertex_count}\n"
        + " ".join(["vertices", *map(str, res.vertices)])
        + "\n"
        + format_map(res.retraction)
        + "\n"
        + serialize(res.core)
    )
    data = {"core": to_json(res.core), "vertices": list(res.vertices), "map": list(res.retraction)}
    return text, data, 0


def _matching_payload(m):
    return m.format() + "\n", {"count": m.count, "edges": [list(e) for e in m.edges], "strict": m.strict}


def cmd_matching(args):
    text, data = _matching_payload(max_matching_subgraph(_undirected(args.graph)))
    return text, data, 0


def cmd_nonintersecting(args):
    text, data = _matching_payload(max_nonintersecting(_undirected(args.graph)))
    return text, data, 0


def cmd_classify(args):
    g = _undirected(args.graph)
    if args.pair:
        l1, r1, l2, r2 = args.pair
        pairs = [((l1, r1), (l2, r2))]
    else:
        ds = doubles(g)
        pairs = [(a, b) for i, a in enumerate(ds) for b in ds[i + 1 :] if a[1] < b[0]]
    lines, rows = [], []
    for d1, d2 in pairs:
        token = format_types(classify_pair(g, d1, d2))
        lines.append(f"pair {d1[0]} {d1[1]} {d2[0]} {d2[1]} {token}")
        rows.append({"d1": list(d1), "d2": list(d2), "types": token})
    return "".join(line + "\n" for line in lines), {"pairs": rows}, 0


def cmd_uniform(args):
    if args.graph is not None:
        if args.types is not None or args.n is not None:
            raise UsageError("give either a graph with --size, or --types with --n")
        if args.size is None:
            raise UsageError("--size is required when searching a graph")
        g = _undirected(args.graph)
        m = max_matching_subgraph(g)
        found = find_uniform_submatching(g, m, args.size)
        if found is None:
            return "none\n", {"types": None, "match": None}, 0
        t, sub = found
        text = f"types {format_types(t)}\n" + sub.format() + "\n"
        return text, {"types": format_types(t), "match": [list(e) for e in sub.edges]}, 0
    if args.types is None or args.n is None:
        raise UsageError("--types and --n are required to build a uniform graph")
    g = build_uniform_graph(parse_types(args.types), args.n)
    return serialize(g), {"types": args.types, "graph": to_json(g)}, 0


def cmd_duality(args):
    def progress(n, checked):
        if args.progress:
            print(f"n={n} checked={checked}", file=args.stderr)

    report = verify_duality(args.k, args.max_n, workers=resolve_workers(args.workers), progress=progress)
    lines = [f"k {report.k}", f"max-n {report.max_n}", f"checked {report.checked}", f"violations {len(report.violations)}"]
    for v in report.violations:
        lines.append(f"violation {v.direction} n={v.graph.vertex_count} index={v.index}")
    data = {
        "k": report.k,
        "max_n": report.max_n,
        "checked": report.checked,
        "violations": [
            {"direction": v.direction, "index": v.index, "graph": to_json(v.graph)} for v in report.violations
        ],
        "matching_mismatches": len(report.matching_mismatches),
    }
    return "\n".join(lines) + "\n", data, (1 if report.violations else 0)


def cmd_refute_pair(args):
    f, d = _undirected(args.f), _undirected(args.d)
    report = refute_pair(f, d, args.max_n)
    data = {"max_n": report.max_n, "checked": report.checked, "confirmed": report.confirmed}
    if report.confirmed:
        return f"confirmed {report.max_n}\nchecked {report.checked}\n", data, 0
    data["direction"] = report.direction
    data["counterexample"] = to_json(report.counterexample)
    text = f"counterexample {report.direction}\nchecked {report.checked}\n" + serialize(report.counterexample)
    return text, data, 1


def cmd_enumerate(args):
    kinds = {
        "undirected": (enumerate_ordered_graphs, 2),
        "oriented": (enumerate_oriented_graphs, 3),
        "directed": (enumerate_directed_graphs, 4),
    }
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    make, base = kinds[args.kind]
    total = base ** (args.n * (args.n - 1) // 2)
    if args.count:
        return f"count {total}\n", {"kind": args.kind, "n": args.n, "count": total}, 0
    if total > args.limit:
        raise UsageError(f"{total} graphs exceed --limit {args.limit}; use --count or raise the limit")
    graphs = list(make(args.n))
    text = "\n".join(serialize(g) for g in graphs)
    return text, {"kind": args.kind, "n": args.n, "count": total, "graphs": [to_json(g) for g in graphs]}, 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    parser = _Parser(prog="ordgraph", description="Ordered graph homomorphisms, colourings and dualities.")
    parser.add_argument("--version", action="version", version=f"ordgraph {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="generate a named family member")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("chi", parents=[common], help="ordered chromatic number")
    p.add_argument("graph")
    p.add_argument("--method", choices=["greedy", "brute"], default="greedy")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("oriented-chi", parents=[common], help="oriented ordered chromatic number")
    p.add_argument("graph")
    p.add_argument("--method", choices=["exact", "greedy-left", "greedy-right"], default="exact")
    p.set_defaults(func=cmd_oriented_chi)

    p = sub.add_parser("hom", parents=[common], help="least ordered homomorphism G -> H")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("embed", parents=[common], help="least order-preserving embedding F into G")
    p.add_argument("pattern")
    p.add_argument("host")
    p.add_argument("--induced", action="store_true")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("core", parents=[common], help="core (smallest retract)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("matching", parents=[common], help="maximum ordered matching subgraph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_matching)

    p = sub.add_parser("nonintersecting", parents=[common], help="maximum non-intersecting edge set")
    p.add_argument("graph")
    p.set_defaults(func=cmd_nonintersecting)

    p = sub.add_parser("classify", parents=[common], help="LL/LR/RL/RR type sets between doubles")
    p.add_argument("graph")
    p.add_argument("--pair", type=int, nargs=4, metavar=("L1", "R1", "L2", "R2"))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("uniform", parents=[common], help="build or find uniformly connected doubles")
    p.add_argument("graph", nargs="?")
    p.add_argument("--types", help="type set such as LR+RL, or - for none")
    p.add_argument("--n", type=int, help="number of doubles to build")
    p.add_argument("--size", type=int, help="number of uniform doubles to find")
    p.set_defaults(func=cmd_uniform)

    p = sub.add_parser("duality", parents=[common], help="exhaustively verify the (M_k, K_k) duality")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--workers", type=int, default=None, help="processes (default: $ORDGRAPH_WORKERS or 1)")
    p.add_argument("--progress", action="store_true", help="report progress on stderr")
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("refute-pair", parents=[common], help="search a counterexample to a candidate duality")
    p.add_argument("f")
    p.add_argument("d")
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_refute_pair)

    p = sub.add_parser("enumerate", parents=[common], help="list or count all graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["undirected", "oriented", "directed"], default="undirected")
    p.add_argument("--count", action="store_true")
    p.add_argument("--limit", type=int, default=count_ordered_graphs(5))
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        args.stderr = stderr
        text, data, status = args.func(args)
    except UsageError as exc:
        print(f"ordgraph: usage error: {exc}", file=stderr)
        return 2
    except (GraphError, ValueError, OSError) as exc:
        print(f"ordgraph: error: {exc}", file=stderr)
        return 2
    if args.json:
        doc = {"schema": SCHEMA, "command": args.command, **data}
        stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())
