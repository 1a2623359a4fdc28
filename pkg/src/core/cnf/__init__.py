# /src/core/cnf/__init__.py

"""Clause-set data model, DIMACS codec and counting parameters."""

from .clause_set import (
    Assignment,
    Clause,
    ClauseSet,
    assignment_literals,
    clause_key,
    literal_key,
    make_clause,
    sorted_literals,
)
from .dimacs import (
    DimacsDocument,
    DimacsReader,
    canonical_digest,
    load_dimacs,
    parse_dimacs,
    read_dimacs_file,
    render_body,
    render_dimacs,
)
from .metrics import (
    apply_assignment,
    full_clause_count,
    is_hitting,
    metrics,
    min_var_degree,
)

__all__ = [
    "Assignment",
    "Clause",
    "ClauseSet",
    "assignment_literals",
    "clause_key",
    "literal_key",
    "make_clause",
    "sorted_literals",
    "DimacsDocument",
    "DimacsReader",
    "canonical_digest",
    "load_dimacs",
    "parse_dimacs",
    "read_dimacs_file",
    "render_body",
    "render_dimacs",
    "apply_assignment",
    "full_clause_count",
    "is_hitting",
    "metrics",
    "min_var_degree",
]
