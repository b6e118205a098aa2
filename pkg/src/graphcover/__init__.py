"""Covering maps of directed multigraphs: fundamental groups, voltage labellings and skew products."""

from .covering import (Covering, CoveringFailure, GraphMorphism, check_morphism, identity_morphism,
                       induced_subgroup, is_covering, lift_walk, sheets, theta, theta_map)
from .finite import FiniteGroup, FiniteSubgroup, finite_group_from_table, finite_subgroup
from .freegroup import (CosetSpace, FreeGroup, FreeWord, SubgroupGraph, contains, coset_space, index,
                        stallings_graph, word_multiply)
from .fundamental import (Labelling, SpanningTree, canonical_labelling, loop_of_word, pi1_free_group,
                          spanning_tree, tree_walk, walk_to_word)
from .graph import (Edge, Graph, Step, Walk, concat_reduce, format_walk, inverse_walk, is_connected,
                    parse_walk, reduce_walk, validate_graph)
from .reconstruct import ReconstructionResult, reconstruct, roundtrip_fuzz
from .skewprod import (GroupAction, SkewProductGraph, ck_skeleton_check, coboundary_isomorphism,
                       cohomologous, full_skew_product, gross_tucker, quotient_graph,
                       relative_skew_product, validate_action, verify_isomorphism)

__version__ = "0.1.0"

__all__ = [
    "Covering",
    "CoveringFailure",
    "GraphMorphism",
    "check_morphism",
    "identity_morphism",
    "induced_subgroup",
    "is_covering",
    "lift_walk",
    "sheets",
    "theta",
    "theta_map",
    "FiniteGroup",
    "FiniteSubgroup",
    "finite_group_from_table",
    "finite_subgroup",
    "CosetSpace",
    "FreeGroup",
    "FreeWord",
    "SubgroupGraph",
    "contains",
    "coset_space",
    "index",
    "stallings_graph",
    "word_multiply",
    "Labelling",
    "SpanningTree",
    "canonical_labelling",
    "loop_of_word",
    "pi1_free_group",
    "spanning_tree",
    "tree_walk",
    "walk_to_word",
    "Edge",
    "Graph",
    "Step",
    "Walk",
    "concat_reduce",
    "format_walk",
    "inverse_walk",
    "is_connected",
    "parse_walk",
    "reduce_walk",
    "validate_graph",
    "ReconstructionResult",
    "reconstruct",
    "roundtrip_fuzz",
    "GroupAction",
    "SkewProductGraph",
    "ck_skeleton_check",
    "coboundary_isomorphism",
    "cohomologous",
    "full_skew_product",
    "gross_tucker",
    "quotient_graph",
    "relative_skew_product",
    "validate_action",
    "verify_isomorphism",
]
