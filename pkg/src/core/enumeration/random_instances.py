# /src/core/enumeration/random_instances.py

"""Seeded random clause-set generators for sweeps and confluence checks."""

import random
from typing import List, Optional

from ..cnf.clause_set import Clause, ClauseSet
from ..errors import PreconditionError


def random_clause(rng: random.Random, n: int, length: int) -> Clause:
    chosen = rng.sample(range(1, n + 1), length)
    return frozenset(v if rng.random() < 0.5 else -v for v in chosen)


def random_clause_set(
    rng: random.Random,
    n: int,
    c: int,
    min_len: int = 1,
    max_len: Optional[int] = None,
) -> ClauseSet:
    """
    Up to c random clauses over {1..n}; duplicates collapse.

    Args:
        rng: Source of randomness
        n: Variable range
        c: Number of clauses drawn
        min_len: Shortest clause length
        max_len: Longest clause length (default n)
    """
    max_len = min(max_len or n, n)
    clauses = [
        random_clause(rng, n, rng.randint(min_len, max_len)) for _ in range(c)
    ]
    return ClauseSet.from_clauses(clauses)


def random_hitting_clause_set(
    rng: random.Random, n: int, splits: int, drop: int = 0
) -> ClauseSet:
    """
    Split clauses of {∅} on fresh variables, then optionally drop clauses.

    Each split replaces C by C ∪ {v} and C ∪ {¬v} for some v ∉ var(C), which
    keeps the clause-set hitting with total weight 1. Dropping clauses keeps
    it hitting and makes it satisfiable.

    Args:
        rng: Source of randomness
        n: Variable range
        splits: Number of splitting steps attempted
        drop: Number of clauses removed at the end
    """
    clauses: List[Clause] = [frozenset()]
    for _ in range(splits):
        splittable = [c for c in clauses if len(c) < n]
        if not splittable:
            break
        clause = rng.choice(splittable)
        used = {abs(lit) for lit in clause}
        var = rng.choice([v for v in range(1, n + 1) if v not in used])
        clauses.remove(clause)
        clauses.extend([clause | {var}, clause | {-var}])
    rng.shuffle(clauses)
    return ClauseSet.from_clauses(clauses[: max(0, len(clauses) - drop)])


def singular_extension(rng: random.Random, clause_set: ClauseSet) -> ClauseSet:
    """
    Add one singular variable while keeping MU and the deficiency.

    Picks a clause E1, a subset D of E1 and clauses E ⊇ D including E1, then
    replaces each E in E by (E \\ D) ∪ {v} and adds D ∪ {¬v} for a new
    variable v. DP-reduction on v gives back the input.

    Args:
        rng: Source of randomness
        clause_set: Clause-set with at least one clause
    """
    if clause_set.c == 0:
        raise PreconditionError("singular extension needs at least one clause")
    clauses = clause_set.sorted_clauses()
    var = clause_set.max_variable + 1
    first = rng.choice(clauses)
    first_lits = sorted(first, key=abs)
    core = frozenset(lit for lit in first_lits if rng.random() < 0.5)
    extended = [first] + [
        c for c in clauses if c != first and core <= c and rng.random() < 0.5
    ]
    result = [c for c in clauses if c not in extended]
    result.extend((c - core) | {var} for c in extended)
    result.append(core | {-var})
    return ClauseSet.from_clauses(result)


def random_singular_extensions(
    rng: random.Random, clause_set: ClauseSet, max_n: int
) -> ClauseSet:
    """Apply between one and max_n - n(F) singular extensions (at least one)."""
    steps = rng.randint(1, max(1, max_n - clause_set.n))
    current = clause_set
    for _ in range(steps):
        current = singular_extension(rng, current)
    return current
