"""Lagrangians of uniform hypergraphs over the probability simplex."""

from .colex import RSet, colex_compare, colex_rank, colex_unrank, rset
from .errors import (
    DegenerateWeightingError,
    ParseError,
    ResourceLimitError,
    ZeroValueError,
)
from .harness import (
    Budget,
    CLAIM_DESCRIPTIONS,
    VerificationReport,
    Witness,
    enumerate_left_compressed,
    lc_max_clique_order,
    merge_reports,
    report_to_csv,
    report_to_json,
    report_to_text,
    run_claim,
    structural_predicate_4_5,
    verify_colex_range,
    verify_conjecture_with_clique,
    verify_conjecture_without_clique,
    verify_corollary_3_x,
    verify_sharpness,
    verify_theorem_3_1,
    verify_theorem_4_x,
    verify_theorem_5_1,
)
from .hypergraph import (
    LinkView,
    RUniformHypergraph,
    colex_graph,
    complete_graph,
    contains_near_clique,
    descendants,
    format_hypergraph,
    hypergraph,
    is_left_compressed,
    left_compress,
    link,
    max_clique_order,
    maximal_cliques,
    parse_hypergraph,
)
from .solver import (
    SolveReport,
    SolverConfig,
    complete_lagrangian,
    complete_lagrangian_exact,
    evaluate,
    evaluate_exact,
    growth_step,
    kkt_residual,
    link_value,
    minimize_support,
    motzkin_straus_value,
    solve,
    sorted_polish,
)

__all__ = [
    "Budget",
    "CLAIM_DESCRIPTIONS",
    "DegenerateWeightingError",
    "LinkView",
    "ParseError",
    "RSet",
    "RUniformHypergraph",
    "ResourceLimitError",
    "SolveReport",
    "SolverConfig",
    "VerificationReport",
    "Witness",
    "ZeroValueError",
    "colex_compare",
    "colex_graph",
    "colex_rank",
    "colex_unrank",
    "complete_graph",
    "complete_lagrangian",
    "complete_lagrangian_exact",
    "contains_near_clique",
    "descendants",
    "enumerate_left_compressed",
    "evaluate",
    "evaluate_exact",
    "format_hypergraph",
    "growth_step",
    "hypergraph",
    "is_left_compressed",
    "kkt_residual",
    "lc_max_clique_order",
    "left_compress",
    "link",
    "link_value",
    "max_clique_order",
    "maximal_cliques",
    "merge_reports",
    "minimize_support",
    "motzkin_straus_value",
    "parse_hypergraph",
    "report_to_csv",
    "report_to_json",
    "report_to_text",
    "rset",
    "run_claim",
    "solve",
    "sorted_polish",
    "structural_predicate_4_5",
    "verify_colex_range",
    "verify_conjecture_with_clique",
    "verify_conjecture_without_clique",
    "verify_corollary_3_x",
    "verify_sharpness",
    "verify_theorem_3_1",
    "verify_theorem_4_x",
    "verify_theorem_5_1",
]
