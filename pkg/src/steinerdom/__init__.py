"""Minimum domination of rooted forests and minimum Steiner domination of
trees, in linear time, with independent exact oracles and an audit harness
for the size formula leaf_count + core domination number."""

from .bench import (
    CSV_COLUMNS,
    DEFAULT_SIZES,
    BenchRecord,
    consecutive_ratios,
    run_bench,
    write_csv,
)
from .corpus import (
    FAMILIES,
    FIXTURES,
    GeneratorSpec,
    enumerate_parent_arrays,
    fixture,
    gen,
    random_prufer_edges,
)
from .forest_domination import LabelState, forest_domination
from .oracles import (
    DEFAULT_CAPS,
    CapExceededError,
    OracleCaps,
    SteinerTreeSpan,
    domination_number_dp,
    is_dominating_set,
    is_steiner_set,
    min_dominating_set,
    min_steiner_dominating_set,
    steiner_distance,
    steiner_number,
    steiner_subtree,
)
from .steiner_domination import (
    CoreForest,
    SteinerDominationResult,
    build_core_forest,
    formula_value,
    steiner_domination,
)
from .tree_model import (
    AdjacencyTree,
    EdgeList,
    ParentArray,
    ParseError,
    ShapeReport,
    TreeModelError,
    ValidationError,
    build_adjacency,
    closed_neighborhood,
    format_parent_file,
    leaf_set,
    parse_edge_list,
    parse_parent_file,
    relabel_bfs,
    to_edge_list,
    validate,
)
from .verify import (
    AUDIT_FIXTURE,
    DiscrepancyCertificate,
    InstanceAudit,
    VerifyReport,
    WitnessChecks,
    audit_instance,
    make_certificate,
    revalidate_certificate,
    run_verify,
    write_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "AUDIT_FIXTURE",
    "AdjacencyTree",
    "BenchRecord",
    "CSV_COLUMNS",
    "CapExceededError",
    "CoreForest",
    "DEFAULT_CAPS",
    "DEFAULT_SIZES",
    "DiscrepancyCertificate",
    "EdgeList",
    "FAMILIES",
    "FIXTURES",
    "GeneratorSpec",
    "InstanceAudit",
    "LabelState",
    "OracleCaps",
    "ParentArray",
    "ParseError",
    "ShapeReport",
    "SteinerDominationResult",
    "SteinerTreeSpan",
    "TreeModelError",
    "ValidationError",
    "VerifyReport",
    "WitnessChecks",
    "audit_instance",
    "build_adjacency",
    "build_core_forest",
    "closed_neighborhood",
    "consecutive_ratios",
    "domination_number_dp",
    "enumerate_parent_arrays",
    "fixture",
    "forest_domination",
    "format_parent_file",
    "formula_value",
    "gen",
    "is_dominating_set",
    "is_steiner_set",
    "leaf_set",
    "make_certificate",
    "min_dominating_set",
    "min_steiner_dominating_set",
    "parse_edge_list",
    "parse_parent_file",
    "random_prufer_edges",
    "relabel_bfs",
    "revalidate_certificate",
    "run_bench",
    "run_verify",
    "steiner_distance",
    "steiner_domination",
    "steiner_number",
    "steiner_subtree",
    "to_edge_list",
    "validate",
    "write_certificate",
    "write_csv",
]
