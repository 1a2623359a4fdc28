# /src/core/oracle/solver.py

"""Complete deterministic satisfiability oracle for desk-scale clause-sets."""

import logging
from typing import Dict, Iterable, List, Optional, Sequence

from ..cnf.clause_set import Clause, ClauseSet, literal_key
from ..errors import PreconditionError, check_cap

logger = logging.getLogger(__name__)

DEFAULT_SAT_VAR_CAP = 40
DEFAULT_MODEL_VAR_CAP = 20


def _assign(clauses: List[Clause], literal: int) -> List[Clause]:
    """Make `literal` true: drop satisfied clauses, shrink the rest."""
    negated = -literal
    return [c - {negated} if negated in c else c for c in clauses if literal not in c]


class SatOracle:
    """
    Backtracking solver with unit propagation and pure-literal elimination.

    Branching is fixed: lowest variable id first, false before true, so
    `find_model` returns the same model for equal inputs on every platform.
    """

    def __init__(
        self,
        var_cap: int = DEFAULT_SAT_VAR_CAP,
        model_var_cap: int = DEFAULT_MODEL_VAR_CAP,
    ):
        """
        Args:
            var_cap: Largest n(F) accepted by is_satisfiable / find_model
            model_var_cap: Largest |V| accepted by models_over
        """
        self.var_cap = var_cap
        self.model_var_cap = model_var_cap

    def is_satisfiable(self, clause_set: ClauseSet) -> bool:
        return self.find_model(clause_set) is not None

    def find_model(self, clause_set: ClauseSet) -> Optional[Dict[int, bool]]:
        """
        Search a total satisfying assignment over var(F).

        Args:
            clause_set: Clause-set with n(F) within the variable cap

        Returns:
            The model, or None when F is unsatisfiable
        """
        check_cap("sat_var_cap", self.var_cap, clause_set.n)
        partial = self._search(list(clause_set.clauses), {})
        if partial is None:
            logger.debug("unsatisfiable: n=%d c=%d", clause_set.n, clause_set.c)
            return None
        # Variables eliminated with their clauses are free; fix them to false.
        return {var: partial.get(var, False) for var in sorted(clause_set.variables)}

    def _search(
        self, clauses: List[Clause], assignment: Dict[int, bool]
    ) -> Optional[Dict[int, bool]]:
        while True:
            if not clauses:
                return assignment
            unit = None
            for clause in clauses:
                if not clause:
                    return None
                if len(clause) == 1:
                    (lit,) = clause
                    if unit is None or literal_key(lit) < literal_key(unit):
                        unit = lit
            if unit is not None:
                assignment = {**assignment, abs(unit): unit > 0}
                clauses = _assign(clauses, unit)
                continue

            literals = {lit for clause in clauses for lit in clause}
            pure = sorted((lit for lit in literals if -lit not in literals), key=literal_key)
            if pure:
                assignment = {**assignment, **{abs(lit): lit > 0 for lit in pure}}
                pure_set = set(pure)
                clauses = [c for c in clauses if not (c & pure_set)]
                continue
            break

        var = min(abs(lit) for clause in clauses for lit in clause)
        for value in (False, True):
            lit = var if value else -var
            result = self._search(_assign(clauses, lit), {**assignment, var: value})
            if result is not None:
                return result
        return None

    def models_over(
        self, clause_set: ClauseSet, variables: Iterable[int]
    ) -> List[Dict[int, bool]]:
        """
        Enumerate every total assignment over V satisfying F.

        Args:
            clause_set: Clause-set with var(F) ⊆ V
            variables: The variable set V

        Returns:
            Models in binary counting order over sorted V, false before true
        """
        table = TruthTable(variables, cap=self.model_var_cap)
        if not clause_set.variables <= set(table.variables):
            raise PreconditionError("var(F) is not contained in the variable set")
        return table.decode(table.models_mask(clause_set.clauses))


class TruthTable:
    """
    Exhaustive semantics over a fixed variable set, one bit per assignment.

    Assignment index bit j holds the value of the j-th smallest variable, so
    sets of assignments are Python ints and unions are bitwise ors.
    """

    def __init__(self, variables: Iterable[int], cap: int = DEFAULT_MODEL_VAR_CAP):
        self.variables: Sequence[int] = tuple(sorted(set(variables)))
        check_cap("model_var_cap", cap, len(self.variables))
        self.size = 1 << len(self.variables)
        self.full = (1 << self.size) - 1
        self._true_masks = {
            var: self._column(j) for j, var in enumerate(self.variables)
        }

    def _column(self, j: int) -> int:
        period = 1 << (j + 1)
        mask = ((1 << (1 << j)) - 1) << (1 << j)
        while period < self.size:
            mask |= mask << period
            period <<= 1
        return mask

    def true_mask(self, var: int) -> int:
        return self._true_masks[var]

    def falsifying_mask(self, clause: Clause) -> int:
        """Assignments falsifying every literal of the clause."""
        mask = self.full
        for lit in clause:
            column = self._true_masks[abs(lit)]
            mask &= (self.full ^ column) if lit > 0 else column
        return mask

    def models_mask(self, clauses: Iterable[Clause]) -> int:
        falsified = 0
        for clause in clauses:
            falsified |= self.falsifying_mask(clause)
        return self.full ^ falsified

    def decode(self, mask: int) -> List[Dict[int, bool]]:
        result = []
        for index in range(self.size):
            if mask >> index & 1:
                result.append(
                    {var: bool(index >> j & 1) for j, var in enumerate(self.variables)}
                )
        return result


__all__ = ["SatOracle", "TruthTable"]
