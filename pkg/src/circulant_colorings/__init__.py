"""Perfect colorings of circulant graphs with odd distance sets.

A coloring is perfect when the multiset of colors around a vertex depends
only on the vertex's own color; the per-color counts form the parameter
matrix.  This package models finite circulants Ci_t(D) (as pseudographs,
so colliding offsets become multiedges and loops) and their infinite cover
Ci(D) on the integers, verifies and constructs perfect colorings, searches
for them exhaustively, and cross-checks the constructions for completeness.
"""

from .core import (
    BudgetExceededError,
    DistanceSet,
    FiniteCirculant,
    FiniteColoring,
    ParameterMatrix,
    PeriodicColoring,
    coloring_from_json,
    coloring_to_json,
    covering_reduction,
    least_rotation,
    make_odd_distance_set,
    neighbor_color_counts,
    neighbor_offsets,
    primitive_period,
    verify_covering,
)
from .perfection import (
    MatrixTemplateFamily,
    OuterDegrees,
    PerfectionVerdict,
    admissible_matrix_templates,
    check_even_odd_balance,
    check_local_patterns,
    check_perfect,
    check_period_length_claim,
    is_bipartite_coloring,
    outer_degrees,
)
from .constructors import (
    ColorSplit,
    MatchingSplit,
    TwoColorCases,
    all_4n_colorings,
    all_matched_colorings,
    construct_4n,
    construct_4n_minus_2,
    construct_4n_plus_2,
    count_nonbipartite_4n,
    path_colorings,
    two_color_cases,
)
from .enumeration import (
    Automaton,
    EnumerationResult,
    WindowState,
    candidate_matrices,
    canonical_form,
    consistent_windows,
    enumerate_perfect_finite,
    enumerate_periodic_perfect,
    step_window,
    surjective_word_count,
    window_is_consistent,
)
from .verification import (
    CheckReport,
    InducedEntry,
    InducedSet,
    RegressionReport,
    build_induced_set,
    check_conjecture,
    check_theorem_k2,
    induce,
    structural_regression_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DistanceSet",
    "FiniteCirculant",
    "FiniteColoring",
    "ParameterMatrix",
    "PeriodicColoring",
    "coloring_from_json",
    "coloring_to_json",
    "covering_reduction",
    "least_rotation",
    "make_odd_distance_set",
    "neighbor_color_counts",
    "neighbor_offsets",
    "primitive_period",
    "verify_covering",
    "MatrixTemplateFamily",
    "OuterDegrees",
    "PerfectionVerdict",
    "admissible_matrix_templates",
    "check_even_odd_balance",
    "check_local_patterns",
    "check_perfect",
    "check_period_length_claim",
    "is_bipartite_coloring",
    "outer_degrees",
    "ColorSplit",
    "MatchingSplit",
    "TwoColorCases",
    "all_4n_colorings",
    "all_matched_colorings",
    "construct_4n",
    "construct_4n_minus_2",
    "construct_4n_plus_2",
    "count_nonbipartite_4n",
    "path_colorings",
    "two_color_cases",
    "Automaton",
    "EnumerationResult",
    "WindowState",
    "candidate_matrices",
    "canonical_form",
    "consistent_windows",
    "enumerate_perfect_finite",
    "enumerate_periodic_perfect",
    "step_window",
    "surjective_word_count",
    "window_is_consistent",
    "CheckReport",
    "InducedEntry",
    "InducedSet",
    "RegressionReport",
    "build_induced_set",
    "check_conjecture",
    "check_theorem_k2",
    "induce",
    "structural_regression_suite",
    "__version__",
]
