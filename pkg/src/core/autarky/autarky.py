# /src/core/autarky/autarky.py

"""Autarky checking and search, lean kernels and surplus."""

import logging
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence

from ..cnf.clause_set import Assignment, Clause, ClauseSet
from ..errors import PreconditionError, check_cap
from ..oracle.solver import SatOracle

logger = logging.getLogger(__name__)


class Autarky(NamedTuple):
    assignment: Dict[int, bool]
    touched: List[Clause]


class LeanReduction(NamedTuple):
    kernel: ClauseSet
    autarkies: List[Autarky]


class Surplus(NamedTuple):
    surplus: int
    witness_vars: List[int]


def is_autarky(assignment: Assignment, clause_set: ClauseSet) -> bool:
    """Every clause touched by the assignment is satisfied by it."""
    for clause in clause_set.clauses:
        touched = False
        satisfied = False
        for lit in clause:
            value = assignment.get(abs(lit))
            if value is None:
                continue
            touched = True
            if value == (lit > 0):
                satisfied = True
                break
        if touched and not satisfied:
            return False
    return True


class AutarkyFinder:
    """
    Exhaustive autarky search over variable subsets in size-ascending order.

    For a subset V the candidate autarkies binding exactly V are the models of
    the touched clauses restricted to literals over V; each subset costs one
    oracle call. This is exponential in n(F).
    """

    def __init__(
        self,
        oracle: Optional[SatOracle] = None,
        var_cap: int = 20,
        surplus_var_cap: int = 20,
    ):
        """
        Args:
            oracle: Satisfiability oracle for the restricted subproblems
            var_cap: Largest n(F) accepted by autarky search and lean kernels
            surplus_var_cap: Largest n(F) accepted by the surplus computation
        """
        self.oracle = oracle or SatOracle()
        self.var_cap = var_cap
        self.surplus_var_cap = surplus_var_cap

    def find_nontrivial_autarky(
        self, clause_set: ClauseSet, order: Optional[Sequence[int]] = None
    ) -> Optional[Autarky]:
        """
        Find an autarky binding at least one variable.

        Args:
            clause_set: Clause-set within the variable cap
            order: Variable order driving subset enumeration (default: by id)

        Returns:
            The autarky and its touched clauses, or None when F is lean
        """
        check_cap("autarky_var_cap", self.var_cap, clause_set.n)
        variables = list(order) if order is not None else sorted(clause_set.variables)
        if set(variables) != clause_set.variables:
            raise PreconditionError("order must list exactly the variables of F")

        for size in range(1, len(variables) + 1):
            for subset in combinations(variables, size):
                chosen = set(subset)
                touched = [
                    c for c in clause_set.sorted_clauses()
                    if any(abs(lit) in chosen for lit in c)
                ]
                restricted = ClauseSet.from_clauses(
                    frozenset(lit for lit in c if abs(lit) in chosen) for c in touched
                )
                model = self.oracle.find_model(restricted)
                if model is not None:
                    logger.debug("autarky over %s", sorted(chosen))
                    return Autarky(dict(sorted(model.items())), touched)
        return None

    def is_lean(self, clause_set: ClauseSet) -> bool:
        return self.find_nontrivial_autarky(clause_set) is None

    def reduce_to_lean_kernel(
        self, clause_set: ClauseSet, order: Optional[Sequence[int]] = None
    ) -> LeanReduction:
        """
        Remove clauses satisfied by autarkies until none is left.

        Args:
            clause_set: Clause-set within the variable cap
            order: Variable order for the autarky searches; restricted to the
                variables still occurring at each round

        Returns:
            The lean kernel and the autarkies applied, in order
        """
        current = clause_set
        applied: List[Autarky] = []
        while True:
            round_order = None
            if order is not None:
                round_order = [v for v in order if v in current.variables]
            autarky = self.find_nontrivial_autarky(current, round_order)
            if autarky is None:
                return LeanReduction(current, applied)
            applied.append(autarky)
            current = current.without_all(autarky.touched)

    def lean_kernel(
        self, clause_set: ClauseSet, order: Optional[Sequence[int]] = None
    ) -> ClauseSet:
        return self.reduce_to_lean_kernel(clause_set, order).kernel

    def surplus(self, clause_set: ClauseSet) -> Surplus:
        """
        Minimise |F_V| - |V| over non-empty V ⊆ var(F).

        Args:
            clause_set: Clause-set with at least one variable

        Returns:
            The surplus with the smallest, then lexicographically first, minimiser
        """
        if not clause_set.variables:
            raise PreconditionError("surplus needs a non-empty variable set")
        check_cap("surplus_var_cap", self.surplus_var_cap, clause_set.n)

        variables = sorted(clause_set.variables)
        position = {var: j for j, var in enumerate(variables)}
        clause_masks = [
            sum(1 << position[abs(lit)] for lit in c) for c in clause_set.clauses
        ]
        best: Optional[Surplus] = None
        for size in range(1, len(variables) + 1):
            for subset in combinations(range(len(variables)), size):
                mask = sum(1 << j for j in subset)
                touching = sum(1 for cm in clause_masks if cm & mask)
                value = touching - size
                if best is None or value < best.surplus:
                    best = Surplus(value, [variables[j] for j in subset])
        return best
