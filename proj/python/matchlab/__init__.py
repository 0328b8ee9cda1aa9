"""Exact-arithmetic workbench for matching series, combinatorial identities
and bipartite graph positivity."""

from matchlab._core import (
    BipartiteGraph,
    a_numeric,
    a_poly_in_j,
    alpha0_coefficients,
    alternating_stirling2,
    bernoulli,
    complete_graph_matchings,
    delta_binomial,
    enumerate_count,
    matching_vector,
    permutation_identity_lhs,
    phi_sum,
    positivity_check,
    pw_polynomial,
    run_suite,
    sample_graph,
    second_identity,
    solve_xx,
    stirling_first_unsigned,
    stirling_second,
    u_sequence,
    verify_pernici,
    weak_positivity_stats,
)

__all__ = [
    "BipartiteGraph",
    "a_numeric",
    "a_poly_in_j",
    "alpha0_coefficients",
    "alternating_stirling2",
    "bernoulli",
    "complete_graph_matchings",
    "delta_binomial",
    "enumerate_count",
    "matching_vector",
    "permutation_identity_lhs",
    "phi_sum",
    "positivity_check",
    "pw_polynomial",
    "run_suite",
    "sample_graph",
    "second_identity",
    "solve_xx",
    "stirling_first_unsigned",
    "stirling_second",
    "u_sequence",
    "verify_pernici",
    "weak_positivity_stats",
]

__version__ = "0.1.0"
