"""Recognition of (double-)arborescences and their minimum word-representants."""

from .graph import Graph, load_graph
from .orientation import (
    DoubleArbOrientation,
    RootedForestPoset,
    arborescence_orientation,
    double_arborescence_orientation,
    longest_chain,
    verify_treelike_orientation,
)
from .splitdec import (
    CliqueStarTree,
    RecognitionReport,
    accessibility_graph,
    build_clique_star_tree,
    classify_via_tree,
    prune_dh,
)
from .wordrep import (
    algorithm1_minword,
    brute_force_min_length,
    double_arb_minword,
    represents,
    restrict,
)

__all__ = [
    "CliqueStarTree", "DoubleArbOrientation", "Graph", "RecognitionReport",
    "RootedForestPoset", "accessibility_graph", "algorithm1_minword",
    "arborescence_orientation", "brute_force_min_length", "build_clique_star_tree",
    "classify_via_tree", "double_arb_minword", "double_arborescence_orientation",
    "load_graph", "longest_chain", "prune_dh", "represents", "restrict",
    "verify_treelike_orientation",
]
