"""Exact solvers for the minimum-weight dominating induced matching problem.

A dominating induced matching (DIM) of a graph is a set of edges that
every edge of the graph touches exactly once: the chosen edges form an
induced matching, and every other edge shares an endpoint with exactly
one of them. Not every graph has one; deciding existence is NP-complete.
This package finds a minimum-weight DIM, counts all DIMs, and ships the
small brute-force oracle the fast solvers are tested against.
"""

from .bench import BenchReport, BenchRow, run_bench
from .coloring import (
    BLACK,
    NO_PAIR,
    UNCOLORED,
    WHITE,
    Coloring,
    ContractViolation,
    PropagationResult,
)
from .domset import (
    SolveOutcome,
    SolveStats,
    classify_part,
    find_dominating_set,
    solve_domset,
)
from .generate import FAMILIES, gen_instance
from .graph import (
    Dim,
    Graph,
    GraphFormatError,
    PreprocessResult,
    format_weight,
    parse_graph,
    preprocess,
    serialize_graph,
    validate_dim,
)
from .mis import (
    CountResult,
    InducedColoring,
    MisStats,
    complete_min,
    count_dims,
    enumerate_mis,
    induced_coloring,
    solve_mis,
)
from .oracle import (
    MAX_ORACLE_N,
    InstanceTooLargeError,
    OracleResult,
    brute_mis,
    brute_solve,
)
from .solve import (
    ALGORITHMS,
    InstanceResult,
    count_instance,
    select_algorithm,
    solve_instance,
)
from .trace import DotTracer

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BLACK",
    "BenchReport",
    "BenchRow",
    "Coloring",
    "ContractViolation",
    "CountResult",
    "Dim",
    "DotTracer",
    "FAMILIES",
    "Graph",
    "GraphFormatError",
    "InducedColoring",
    "InstanceResult",
    "InstanceTooLargeError",
    "MAX_ORACLE_N",
    "MisStats",
    "NO_PAIR",
    "OracleResult",
    "PreprocessResult",
    "PropagationResult",
    "SolveOutcome",
    "SolveStats",
    "UNCOLORED",
    "WHITE",
    "brute_mis",
    "brute_solve",
    "classify_part",
    "complete_min",
    "count_dims",
    "count_instance",
    "enumerate_mis",
    "find_dominating_set",
    "format_weight",
    "gen_instance",
    "induced_coloring",
    "parse_graph",
    "preprocess",
    "run_bench",
    "select_algorithm",
    "serialize_graph",
    "solve_domset",
    "solve_instance",
    "solve_mis",
    "validate_dim",
    "__version__",
]
