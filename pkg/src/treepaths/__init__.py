"""Exact path counts in perfect m-ary trees.

:mod:`treepaths.exactcount` holds the closed forms, :mod:`treepaths.oracle`
the brute-force BFS ground truth they are checked against.
"""
from .exactcount import (
    ExactDivisionError,
    RootedShape,
    UnrootedShape,
    bridge_path_count,
    dejong_binary,
    geom_sum,
    pair_total,
    rooted_count_prop,
    rooted_count_theorem,
    type_path_count,
    unrooted_count_prop,
    unrooted_count_theorem,
    unrooted_leaf_count,
    vr,
    vu,
)
from .oracle import (
    DistanceHistogram,
    ExplicitTree,
    build_rooted,
    build_unrooted,
    degree_formula_counts,
    distance_histogram,
    type_histogram,
)
from .treeio import TreeClassification, classify, emit_histogram, parse_edge_list

__version__ = "0.1.0"
