"""Substructure-count vertex/edge identifiers, Weisfeiler-Leman tests, and
random-weight message-passing encoders for graph isomorphism experiments."""

from .graphs import (
    Graph,
    GraphError,
    SRParameters,
    check_strongly_regular,
    encode_graph6,
    graph_from_edges,
    graph_to_json,
    graph_to_json_obj,
    parse_graph6,
    parse_graph6_file,
    parse_json_graph,
    parse_json_graphs,
)
from .matching import (
    MatchTimeout,
    OrbitPartition,
    are_isomorphic,
    automorphisms_of,
    canonical_matches,
    compute_orbits,
    count_distinct_subgraphs,
)
from .catalog import (
    ALL_GRAPHS_CAP,
    COUNTING_MODES,
    FAMILIES,
    TREE_SIZE_CAP,
    Collection,
    SubstructurePattern,
    all_graphs_of_size,
    clique_graph,
    cycle_graph,
    family_collection,
    make_pattern,
    nonisomorphic_trees,
    path_graph,
    star_graph,
)
from .features import (
    EncodedIdentifiers,
    StructuralFeatures,
    apply_vocabulary,
    build_vocabulary,
    deck_check,
    disambiguation_score,
    edge_dimension_names,
    edge_features,
    features_to_json_obj,
    identifier_multisets_equal,
    one_hot_encode,
    prefix_features,
    reconstruct_vertex_from_edge,
    structural_features,
    vertex_dimension_names,
    vertex_features,
    vocabulary_from_json,
    vocabulary_to_json,
    write_vertex_features_csv,
)
from .wl import (
    FWL_CAPS,
    TESTS,
    Coloring,
    kfwl_refine,
    kfwl_refine_joint,
    wl1_refine,
    wl1_refine_joint,
    wl_distinguish,
)
from .encoder import (
    VARIANTS,
    EncoderConfig,
    EncodingContext,
    Representation,
    build_context,
    encode,
    gsn_isomorphism_test,
    gsn_isomorphism_test_multiseed,
    representation_distance,
)
from .bench import (
    BENCH_CSV_COLUMNS,
    BenchRecord,
    fit_loglog_slope,
    run_bench,
    worst_case_reference,
    write_bench_csv,
)
from .estimators import GSNGraphEncoder, StructuralFeatureTransformer
from . import datasets

__version__ = "0.1.0"

__all__ = [
    "ALL_GRAPHS_CAP",
    "BENCH_CSV_COLUMNS",
    "BenchRecord",
    "COUNTING_MODES",
    "Collection",
    "Coloring",
    "EncodedIdentifiers",
    "EncoderConfig",
    "EncodingContext",
    "FAMILIES",
    "FWL_CAPS",
    "GSNGraphEncoder",
    "Graph",
    "GraphError",
    "MatchTimeout",
    "OrbitPartition",
    "Representation",
    "SRParameters",
    "StructuralFeatureTransformer",
    "StructuralFeatures",
    "SubstructurePattern",
    "TESTS",
    "TREE_SIZE_CAP",
    "VARIANTS",
    "all_graphs_of_size",
    "apply_vocabulary",
    "are_isomorphic",
    "automorphisms_of",
    "build_context",
    "build_vocabulary",
    "canonical_matches",
    "check_strongly_regular",
    "clique_graph",
    "compute_orbits",
    "count_distinct_subgraphs",
    "cycle_graph",
    "datasets",
    "deck_check",
    "disambiguation_score",
    "edge_dimension_names",
    "edge_features",
    "encode",
    "encode_graph6",
    "family_collection",
    "features_to_json_obj",
    "fit_loglog_slope",
    "graph_from_edges",
    "graph_to_json",
    "graph_to_json_obj",
    "gsn_isomorphism_test",
    "gsn_isomorphism_test_multiseed",
    "identifier_multisets_equal",
    "kfwl_refine",
    "kfwl_refine_joint",
    "make_pattern",
    "nonisomorphic_trees",
    "one_hot_encode",
    "parse_graph6",
    "parse_graph6_file",
    "parse_json_graph",
    "parse_json_graphs",
    "path_graph",
    "prefix_features",
    "reconstruct_vertex_from_edge",
    "representation_distance",
    "run_bench",
    "star_graph",
    "structural_features",
    "vertex_dimension_names",
    "vertex_features",
    "vocabulary_from_json",
    "vocabulary_to_json",
    "wl1_refine",
    "wl1_refine_joint",
    "wl_distinguish",
    "worst_case_reference",
    "write_bench_csv",
    "write_vertex_features_csv",
]
