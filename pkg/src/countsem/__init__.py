"""Graded argument strength for abstract argumentation frameworks.

Evaluates arguments on a continuous [0, 1] scale by counting attackers and
defenders along walks of the attack graph, damped by length and normalized
so the scale stays bounded.  Also ships classical extension semantics, exact
walk counting, dispute trees, rankings with verified guarantees, and
APX/TGF interchange tooling.
"""

from .counting import (
    CountingParams,
    ValuationTrace,
    counting_semantics,
    iterate,
    normalization_factor,
    simple_counting,
    solve_direct,
)
from .extensions import ExtensionSet, enumerate_extensions, grounded_extension
from .formats import ParseDiagnostic, ParseError, parse_apx, parse_tgf
from .framework import (
    Argument,
    ArgumentationFramework,
    AttackMatrix,
    FrameworkError,
    build_framework,
)
from .ranking import PropertyReport, Ranking, check_properties, rank, set_leq, set_lt
from .walks import (
    DisputeTree,
    WalkCountMatrix,
    classify,
    count_walks,
    dispute_tree,
    has_cycle,
    nilpotency_index,
    walk_count_matrix,
)

__all__ = [
    "Argument",
    "ArgumentationFramework",
    "AttackMatrix",
    "CountingParams",
    "DisputeTree",
    "ExtensionSet",
    "FrameworkError",
    "ParseDiagnostic",
    "ParseError",
    "PropertyReport",
    "Ranking",
    "ValuationTrace",
    "WalkCountMatrix",
    "build_framework",
    "check_properties",
    "classify",
    "count_walks",
    "counting_semantics",
    "dispute_tree",
    "enumerate_extensions",
    "grounded_extension",
    "has_cycle",
    "iterate",
    "nilpotency_index",
    "normalization_factor",
    "parse_apx",
    "parse_tgf",
    "rank",
    "set_leq",
    "set_lt",
    "simple_counting",
    "solve_direct",
    "walk_count_matrix",
]

__version__ = "0.1.0"
