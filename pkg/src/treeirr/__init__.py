"""Irregularity and Zagreb-type indices on trees: exact computation,
exhaustive enumeration per degree sequence, extremal search with witnesses,
and a claim-verification suite."""

from .degseq import (
    DegreeSequence,
    Orientation,
    all_tree_sequences,
    erdos_gallai_check,
    is_tree_realizable,
    power_mean_inequality_check,
)
from .extremal import (
    EnumerationMode,
    ExtremalResult,
    SpineExtremalResult,
    count_labeled_trees,
    enumerate_trees,
    extremal_index,
    spine_permutation_extremal,
)
from .families import (
    CaterpillarSpec,
    build_caterpillar,
    build_complete_bipartite,
    build_double_star,
    build_path,
    build_star,
    build_uniform_caterpillar,
    parse_family,
)
from .graphs import (
    SimpleGraph,
    canonical_form,
    degrees,
    graph_from_edge_list,
    is_tree,
    parse_edge_list,
    prufer_decode,
    prufer_encode,
)
from .indices import IndexKind, compute_all, compute_index

__version__ = "0.1.0"
