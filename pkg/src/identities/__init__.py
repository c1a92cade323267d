"""Law and identity checkers with exhaustive or sampled counter-model search."""

from .checks import (
    ExperimentReport,
    builtin_antitone,
    check_antitone,
    check_chain_closed_forms,
    check_closed_forms,
    check_distributive_law,
    check_klein_invariance,
    check_lattice_axioms,
    check_LU_equality,
    check_LU_inclusion,
    check_median_law,
    check_modular_law,
    check_monotonicity,
    check_sandwich,
    cube_nodes,
    diagonal_identities,
    experiment_modular_inclusion,
    transport_antitone,
    verify_cube,
    verify_diagonal_identities,
)
from .report import CheckReport, Counterexample, combine_reports, point_report
from .search import (
    QUINTUPLE_LABELS,
    QuintupleLaw,
    SearchParameters,
    carrier_or_sampler,
    pairs_differ,
    resolve_parameters,
    search_quintuples,
    search_tuples,
)

__all__ = [
    "CheckReport",
    "Counterexample",
    "ExperimentReport",
    "QUINTUPLE_LABELS",
    "QuintupleLaw",
    "SearchParameters",
    "builtin_antitone",
    "carrier_or_sampler",
    "check_antitone",
    "check_chain_closed_forms",
    "check_closed_forms",
    "check_distributive_law",
    "check_klein_invariance",
    "check_lattice_axioms",
    "check_LU_equality",
    "check_LU_inclusion",
    "check_median_law",
    "check_modular_law",
    "check_monotonicity",
    "check_sandwich",
    "combine_reports",
    "cube_nodes",
    "diagonal_identities",
    "experiment_modular_inclusion",
    "pairs_differ",
    "point_report",
    "resolve_parameters",
    "search_quintuples",
    "search_tuples",
    "transport_antitone",
    "verify_cube",
    "verify_diagonal_identities",
]
