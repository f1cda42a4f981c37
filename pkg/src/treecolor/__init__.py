"""Equitable tree-colorings of interval graphs.

A library and CLI for colorings where every color class induces a forest
and any two class sizes differ by at most one: a guaranteed round-robin
construction along the interval order, a linear-time decision procedure for
proper interval representations, exhaustive small-instance solvers, and
bin-packing reduction gadgets with witness mappings in both directions.
"""

from .coloring import (
    Coloring,
    ConsistencyError,
    SolveTimeout,
    Verdict,
    decide_proper_interval,
    exact_solve,
    round_robin_color,
    verify_equitable_tree_coloring,
)
from .gadgets import (
    BinPackingInstance,
    ChainPart,
    GadgetLayout,
    SplitPart,
    build_interval_gadget,
    build_split_gadget,
    chain_clique_sequence,
    coloring_from_packing,
    gen_random_interval,
    packing_from_coloring,
    solve_bin_packing,
    validate_layout,
    verify_maximal_clique_order,
)
from .graph import (
    Graph,
    IntervalRep,
    ProperContainmentError,
    RepresentationError,
    VertexOrder,
    color_classes_are_forests,
    derive_graph,
    find_proper_containment,
    first_monochromatic_cycle_edge,
    interval_order,
    is_proper_representation,
    is_star_free,
    max_clique_sweep,
    verify_order,
)

__version__ = "0.1.0"

__all__ = [
    "BinPackingInstance",
    "ChainPart",
    "Coloring",
    "ConsistencyError",
    "GadgetLayout",
    "Graph",
    "IntervalRep",
    "ProperContainmentError",
    "RepresentationError",
    "SolveTimeout",
    "SplitPart",
    "Verdict",
    "VertexOrder",
    "build_interval_gadget",
    "build_split_gadget",
    "chain_clique_sequence",
    "color_classes_are_forests",
    "coloring_from_packing",
    "decide_proper_interval",
    "derive_graph",
    "exact_solve",
    "find_proper_containment",
    "first_monochromatic_cycle_edge",
    "gen_random_interval",
    "interval_order",
    "is_proper_representation",
    "is_star_free",
    "max_clique_sweep",
    "packing_from_coloring",
    "round_robin_color",
    "solve_bin_packing",
    "validate_layout",
    "verify_equitable_tree_coloring",
    "verify_maximal_clique_order",
    "verify_order",
]
