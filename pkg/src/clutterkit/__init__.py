"""clutterkit: exact algebra of clutters (Sperner families).

Blocker computation, the deletion/contraction minor algebra, join/meet
lattice operations, semi-matching and matching-minor machinery with a
constructive extraction procedure, a blocker-size bound for bounded-rank
matching-minor-free clutters, and Set Cover / SAT solvers that read their
answers from the blocker.
"""
from .core import Clutter, Edge, ONE, ZERO
from .errors import (
    InfeasibleInstanceError,
    NotInClassError,
    ParseError,
    ResourceLimitError,
)
from .blocker import blocker, is_transversal, maximal_independent_sets
from .matching import (
    ConflictGraph,
    MinorWitness,
    SemiMatching,
    build_conflict_graph,
    enumerate_semi_matchings,
    expansion,
    extend_semi_matching,
    extract_minor_matching,
    find_kk2_minor,
    greedy_independent_set,
    is_expanded_minor_matching,
    is_k_matching,
    is_semi_matching,
    matching_to_minor,
)
from .bounds import (
    BoundParams,
    BoundReport,
    blocker_size_bound,
    class_membership,
    verify_bound,
)
from .reductions import (
    Assignment,
    CnfFormula,
    MonotoneOracle,
    SetCoverInstance,
    cnf_to_clutter,
    satisfies,
    setcover_to_clutter,
    solve_sat,
    solve_setcover,
)
from .generate import kk2, random_clutter, staircase
from .formats import (
    format_semi_matching,
    parse_clutter,
    parse_dimacs,
    parse_semi_matching,
    parse_setcover,
    serialize_clutter,
)
from .laws import LawResult, run_law_suite

__all__ = [
    "Assignment",
    "BoundParams",
    "BoundReport",
    "Clutter",
    "CnfFormula",
    "ConflictGraph",
    "Edge",
    "InfeasibleInstanceError",
    "LawResult",
    "MinorWitness",
    "MonotoneOracle",
    "NotInClassError",
    "ONE",
    "ParseError",
    "ResourceLimitError",
    "SemiMatching",
    "SetCoverInstance",
    "ZERO",
    "blocker",
    "blocker_size_bound",
    "build_conflict_graph",
    "class_membership",
    "cnf_to_clutter",
    "enumerate_semi_matchings",
    "expansion",
    "extend_semi_matching",
    "extract_minor_matching",
    "find_kk2_minor",
    "format_semi_matching",
    "greedy_independent_set",
    "is_expanded_minor_matching",
    "is_k_matching",
    "is_semi_matching",
    "is_transversal",
    "kk2",
    "matching_to_minor",
    "maximal_independent_sets",
    "parse_clutter",
    "parse_dimacs",
    "parse_semi_matching",
    "parse_setcover",
    "random_clutter",
    "run_law_suite",
    "satisfies",
    "serialize_clutter",
    "setcover_to_clutter",
    "solve_sat",
    "solve_setcover",
    "staircase",
    "verify_bound",
]
