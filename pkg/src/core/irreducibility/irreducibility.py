# /src/core/irreducibility/irreducibility.py

"""Clause-irreducibility: no proper sub-clause-set is equivalent to one clause."""

import logging
from itertools import combinations
from typing import NamedTuple, Optional

from ..cnf.clause_set import Clause, ClauseSet
from ..errors import PreconditionError, check_cap
from ..oracle.solver import SatOracle, TruthTable

logger = logging.getLogger(__name__)


class IrreducibilityCheck(NamedTuple):
    is_irreducible: bool
    subset: Optional[ClauseSet] = None
    clause: Optional[Clause] = None


def clause_from_falsifying_mask(table: TruthTable, falsified: int) -> Optional[Clause]:
    """
    Read a clause off a set of falsifying assignments, if that set is a cube.

    The falsifying assignments of a clause C fix exactly the complements of
    C's literals and leave every other coordinate free.

    Args:
        table: Truth table over the ambient variables
        falsified: Bitset of falsifying assignments

    Returns:
        The clause whose falsifying cube equals the set, or None
    """
    if not falsified:
        return None
    literals = []
    cube = table.full
    for var in table.variables:
        column = table.true_mask(var)
        if not falsified & column:
            # var is false on every falsifying assignment
            literals.append(var)
            cube &= table.full ^ column
        elif falsified & column == falsified:
            literals.append(-var)
            cube &= column
    if cube != falsified:
        return None
    return frozenset(literals)


class IrreducibilityChecker:
    """Truth-table based single-clause equivalence and subset search."""

    def __init__(
        self,
        oracle: Optional[SatOracle] = None,
        equivalence_var_cap: int = 16,
        clause_cap: int = 16,
    ):
        """
        Args:
            oracle: Oracle used for the unsatisfiability precondition
            equivalence_var_cap: Largest n(F') for truth tables
            clause_cap: Largest c(F) for subset enumeration
        """
        self.oracle = oracle or SatOracle()
        self.equivalence_var_cap = equivalence_var_cap
        self.clause_cap = clause_cap

    def equivalent_clause(self, clause_set: ClauseSet) -> Optional[Clause]:
        """
        Return the clause logically equivalent to F' over var(F'), if any.

        Unsatisfiable F' yields the empty clause.
        """
        if clause_set.c < 1:
            raise PreconditionError("equivalent_clause needs at least one clause")
        table = TruthTable(clause_set.variables, cap=self.equivalence_var_cap)
        falsified = table.full ^ table.models_mask(clause_set.clauses)
        return clause_from_falsifying_mask(table, falsified)

    def is_clause_irreducible(self, clause_set: ClauseSet) -> IrreducibilityCheck:
        """
        Search proper subsets F' with c(F') >= 2 equivalent to a single clause.

        Subsets are visited by decreasing size, then in combination order of
        the canonically sorted clauses; the first hit is the witness.

        Args:
            clause_set: Unsatisfiable clause-set within the clause cap

        Returns:
            IrreducibilityCheck with the witness pair on a negative answer
        """
        check_cap("irreducibility_clause_cap", self.clause_cap, clause_set.c)
        if self.oracle.is_satisfiable(clause_set):
            raise PreconditionError("clause-irreducibility is defined for unsatisfiable F")

        table = TruthTable(clause_set.variables, cap=self.equivalence_var_cap)
        clauses = clause_set.sorted_clauses()
        masks = [table.falsifying_mask(c) for c in clauses]
        for size in range(len(clauses) - 1, 1, -1):
            for subset in combinations(range(len(clauses)), size):
                falsified = 0
                for index in subset:
                    falsified |= masks[index]
                clause = clause_from_falsifying_mask(table, falsified)
                if clause is not None:
                    witness = ClauseSet.from_clauses(clauses[i] for i in subset)
                    logger.debug("reducible via %r", witness)
                    return IrreducibilityCheck(False, witness, clause)
        return IrreducibilityCheck(True)
