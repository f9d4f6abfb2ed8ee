"""Exact fractional clique decompositions of uniform hypergraphs."""

from ._core import (  # noqa: F401
    Hypergraph,
    Packing,
    almost_to_full,
    build_matrix,
    colex_rank,
    colex_unrank,
    complete_symmetric,
    decompose_minus_matching,
    deficiency_exact,
    family_deficiency_exact,
    fix_packing,
    lp_feasible,
    main_parameters,
    missing_edge_packing,
    pipeline,
    quasi_independent_distribution,
    solve_weights,
    uniform_family_packing,
)

__all__ = [
    "Hypergraph",
    "Packing",
    "almost_to_full",
    "build_matrix",
    "colex_rank",
    "colex_unrank",
    "complete_symmetric",
    "decompose_minus_matching",
    "deficiency_exact",
    "family_deficiency_exact",
    "fix_packing",
    "lp_feasible",
    "main_parameters",
    "missing_edge_packing",
    "pipeline",
    "quasi_independent_distribution",
    "solve_weights",
    "uniform_family_packing",
]
