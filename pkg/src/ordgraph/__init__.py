"""Ordered graphs: homomorphisms, interval colourings, the matching/complete
duality, chi-boundedness via ordered matchings, and oriented variants."""

__version__ = "0.1.0"

from .coloring import (
    ColoringResult,
    OrientedColoringResult,
    brute_chi,
    directed_chi,
    greedy_chi,
    oriented_chi_exact,
    oriented_chi_greedy,
)
from .duality import DualityReport, PairCandidateReport, refute_pair, verify_duality
from .errors import (
    AntiparallelConflict,
    BoundExceeded,
    GraphError,
    NonIndependentBlock,
    OverlappingDoubles,
    ParseError,
)
from .families import (
    gen_asymmetry_example,
    gen_complete,
    gen_crossing,
    gen_matching,
    gen_mlr,
    gen_mplus,
    gen_mrl,
    gen_oriented_matching,
    gen_path,
)
from .fileformat import parse, serialize
from .graphs import (
    DirectedOrderedGraph,
    IntervalPartition,
    Orientation,
    OrderedGraph,
    OrientedOrderedGraph,
    enumerate_directed_graphs,
    enumerate_ordered_graphs,
    enumerate_oriented_graphs,
    quotient,
)
from .homomorphism import check_embedding, check_hom, compute_core, find_embedding, find_hom, is_core
from .matchings import (
    MatchingEmbedding,
    build_uniform_graph,
    classify_pair,
    doubles,
    find_uniform_submatching,
    max_matching_subgraph,
    max_nonintersecting,
)

__all__ = [
    "AntiparallelConflict",
    "BoundExceeded",
    "ColoringResult",
    "DirectedOrderedGraph",
    "DualityReport",
    "GraphError",
    "IntervalPartition",
    "MatchingEmbedding",
    "NonIndependentBlock",
    "OrderedGraph",
    "Orientation",
    "OrientedColoringResult",
    "OrientedOrderedGraph",
    "OverlappingDoubles",
    "PairCandidateReport",
    "ParseError",
    "brute_chi",
    "build_uniform_graph",
    "check_embedding",
    "check_hom",
    "classify_pair",
    "compute_core",
    "directed_chi",
    "doubles",
    "enumerate_directed_graphs",
    "enumerate_ordered_graphs",
    "enumerate_oriented_graphs",
    "find_embedding",
    "find_hom",
    "find_uniform_submatching",
    "gen_asymmetry_example",
    "gen_complete",
    "gen_crossing",
    "gen_matching",
    "gen_mlr",
    "gen_mplus",
    "gen_mrl",
    "gen_oriented_matching",
    "gen_path",
    "greedy_chi",
    "is_core",
    "max_matching_subgraph",
    "max_nonintersecting",
    "oriented_chi_exact",
    "oriented_chi_greedy",
    "parse",
    "quotient",
    "refute_pair",
    "serialize",
    "verify_duality",
]
