# /tests/helpers.py

import itertools

from core.cnf import ClauseSet


def clause_set(*clauses):
    return ClauseSet(clauses)


def brute_force_models(cs: ClauseSet, variables=None):
    """Every total assignment over `variables` (default var(F)) satisfying F."""
    variables = sorted(variables if variables is not None else cs.variables)
    models = []
    for values in itertools.product((False, True), repeat=len(variables)):
        assignment = dict(zip(variables, values))
        if all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause)
            for clause in cs.clauses
        ):
            models.append(assignment)
    return models


def brute_force_sat(cs: ClauseSet) -> bool:
    return bool(brute_force_models(cs))


def write_cnf(tmp_path, text, name="input.cnf"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)
