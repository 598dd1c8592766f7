"""Maximal Diophantine graphs, their closed-form invariants, necessary
conditions for Diophantine labelability, and exact labeling search."""

from .conditions import ConditionReport, check_conditions, check_sufficient
from .errors import (
    DiographError,
    GraphParseError,
    OutOfRangeError,
    ResourceLimitError,
    SearchBudgetExceeded,
)
from .graphcore import (
    DegreeSequence,
    Graph,
    LabeledGraph,
    add_edge,
    clique_number_exact,
    degree_sequence,
    delete_edge,
    full_degree_count,
    independence_number_exact,
    is_spanning_subgraph,
    join,
    make_complete,
    make_cycle,
    make_null,
    min_degree,
    parse_graph,
    serialize_graph,
)
from .labeler import LabelingOutcome, find_labeling, is_labeling_isomorphic, verify_labeling
from .maximal import (
    DnProfile,
    LabelRule,
    MinLabelResult,
    build_dn,
    build_maximal_gamma,
    clique_number_closed,
    degree_of_label,
    diophantine_rule,
    edge_count,
    full_degree_count_closed,
    full_degree_count_ie,
    independence_number_closed,
    is_complete_dn,
    is_full_degree_label,
    min_degree_min_label,
    nonadjacency_witness,
    prime_rule,
    profile,
    reduced_label,
)

__version__ = "0.1.0"
