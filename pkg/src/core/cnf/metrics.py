# /src/core/cnf/metrics.py

"""Counting parameters and basic semantic operations on clause-sets."""

from itertools import combinations
from typing import Optional

from schemas.metrics import Metrics, VariableDegree
from .clause_set import Assignment, ClauseSet


def full_clause_count(clause_set: ClauseSet) -> int:
    n = clause_set.n
    return sum(1 for clause in clause_set.clauses if len(clause) == n)


def min_var_degree(clause_set: ClauseSet) -> Optional[int]:
    degrees = clause_set.degrees()
    if not degrees:
        return None
    return min(pos + neg for pos, neg in degrees.values())


def metrics(clause_set: ClauseSet) -> Metrics:
    """
    Compute n, c, deficiency, degree profile and full-clause count.

    Args:
        clause_set: Any clause-set

    Returns:
        Metrics; min/max degree are absent when no variable occurs
    """
    degrees = clause_set.degrees()
    totals = [pos + neg for pos, neg in degrees.values()]
    return Metrics(
        n=clause_set.n,
        c=clause_set.c,
        deficiency=clause_set.deficiency,
        min_var_degree=min(totals) if totals else None,
        max_var_degree=max(totals) if totals else None,
        full_clause_count=full_clause_count(clause_set),
        degrees=[
            VariableDegree(variable=var, positive=pos, negative=neg)
            for var, (pos, neg) in degrees.items()
        ],
    )


def apply_assignment(clause_set: ClauseSet, assignment: Assignment) -> ClauseSet:
    """
    Remove satisfied clauses and falsified literals.

    Args:
        clause_set: Clause-set to simplify
        assignment: Partial map variable -> truth value

    Returns:
        The simplified clause-set (duplicates collapse)
    """
    result = set()
    for clause in clause_set.clauses:
        satisfied = False
        kept = []
        for lit in clause:
            value = assignment.get(abs(lit))
            if value is None:
                kept.append(lit)
            elif value == (lit > 0):
                satisfied = True
                break
        if not satisfied:
            result.add(frozenset(kept))
    return ClauseSet.from_clauses(result)


def clashes(first, second) -> bool:
    return any(-lit in second for lit in first)


def is_hitting(clause_set: ClauseSet) -> bool:
    """True iff every two distinct clauses contain a complementary literal pair."""
    return all(clashes(a, b) for a, b in combinations(clause_set.clauses, 2))
