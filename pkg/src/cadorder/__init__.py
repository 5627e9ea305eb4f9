"""Variable-ordering heuristics for cylindrical algebraic decomposition.

Exact sparse polynomial arithmetic over the integers, McCallum-style
projection, Sturm-sequence real-root counting, the Brown/sotd/ndrr ordering
heuristics, and a benchmark harness over externally supplied cell counts.
"""

from .heuristics import (
    BrownTriple,
    HeuristicReport,
    brown_candidates,
    brown_triple,
    choose,
    enumerate_orderings,
    lex_tiebreak,
    ndrr_value,
    sotd_value,
)
from .parsing import ParseError, parse_system, render
from .poly import (
    Monomial,
    Polynomial,
    PolySystem,
    Variable,
    canonicalize,
    discriminant,
    resultant,
)
from .projection import (
    ProjectionSet,
    VariableOrdering,
    format_ordering,
    full_projection,
    parse_ordering,
    project_once,
)
from .stats import (
    CellCountTable,
    CellTableError,
    SavingsSummary,
    best_pick_counts,
    compute_report,
    emit_report,
    load_cell_table,
    savings_percent,
    summarize,
    timeout_avoidance,
)
from .univariate import (
    UnivariatePolynomial,
    count_distinct_real_roots,
    squarefree_part,
    sturm_sequence,
    to_univariate,
    univariate_gcd,
)

__all__ = [
    "BrownTriple",
    "CellCountTable",
    "CellTableError",
    "HeuristicReport",
    "Monomial",
    "ParseError",
    "PolySystem",
    "Polynomial",
    "ProjectionSet",
    "SavingsSummary",
    "UnivariatePolynomial",
    "Variable",
    "VariableOrdering",
    "best_pick_counts",
    "brown_candidates",
    "brown_triple",
    "canonicalize",
    "choose",
    "compute_report",
    "count_distinct_real_roots",
    "discriminant",
    "emit_report",
    "enumerate_orderings",
    "format_ordering",
    "full_projection",
    "lex_tiebreak",
    "load_cell_table",
    "ndrr_value",
    "parse_ordering",
    "parse_system",
    "project_once",
    "render",
    "resultant",
    "savings_percent",
    "sotd_value",
    "squarefree_part",
    "sturm_sequence",
    "summarize",
    "timeout_avoidance",
    "to_univariate",
    "univariate_gcd",
]
