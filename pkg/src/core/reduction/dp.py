# /src/core/reduction/dp.py

"""DP-reduction, singular DP-reduction and normal-form exploration."""

import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from schemas.common import ReductionStrategy
from schemas.reduction import NormalFormClass, ReductionStep, ReductionTrace
from ..cnf.clause_set import Clause, ClauseSet
from ..cnf.dimacs import render_body
from ..errors import PreconditionError, check_cap
from .isomorphism import IsomorphismChecker

logger = logging.getLogger(__name__)


def singular_variables(clause_set: ClauseSet) -> Set[int]:
    """
    Variables occurring in one of their signs exactly once.

    A variable with degrees (1, 0) counts as singular; its DP-reduction has no
    resolvents and simply drops its clause.
    """
    return {
        var
        for var, (pos, neg) in clause_set.degrees().items()
        if pos == 1 or neg == 1
    }


def dp_reduce(clause_set: ClauseSet, var: int) -> ClauseSet:
    """
    Eliminate `var` by replacing its clauses with all non-tautological resolvents.

    Args:
        clause_set: Clause-set containing var
        var: Variable to eliminate

    Returns:
        The DP-reduct; duplicate resolvents collapse
    """
    if var not in clause_set.variables:
        raise PreconditionError(f"variable {var} does not occur")

    positive: List[Clause] = []
    negative: List[Clause] = []
    kept: Set[Clause] = set()
    for clause in clause_set.clauses:
        if var in clause:
            positive.append(clause - {var})
        elif -var in clause:
            negative.append(clause - {-var})
        else:
            kept.add(clause)

    for left in positive:
        for right in negative:
            if any(-lit in right for lit in left):
                continue
            kept.add(left | right)
    return ClauseSet.from_clauses(kept)


def _pick(
    singular: Set[int], strategy: ReductionStrategy, order: Sequence[int]
) -> int:
    if strategy == ReductionStrategy.LAST_ID:
        return max(singular)
    if strategy == ReductionStrategy.GIVEN_ORDER:
        for var in order:
            if var in singular:
                return var
    return min(singular)


class Reducer:
    """Singular DP-reduction to nonsingular normal forms."""

    def __init__(
        self,
        isomorphism: Optional[IsomorphismChecker] = None,
        normal_form_var_cap: int = 12,
    ):
        """
        Args:
            isomorphism: Checker used to group normal forms into classes
            normal_form_var_cap: Largest n(F) for exhaustive exploration
        """
        self.isomorphism = isomorphism or IsomorphismChecker()
        self.normal_form_var_cap = normal_form_var_cap

    def sdp_normal_form(
        self,
        clause_set: ClauseSet,
        strategy: ReductionStrategy = ReductionStrategy.FIRST_ID,
        order: Sequence[int] = (),
    ) -> Tuple[ClauseSet, ReductionTrace]:
        """
        Apply sDP-reduction until no singular variable remains.

        Args:
            clause_set: Input clause-set
            strategy: Rule for choosing the next singular variable
            order: Variable order for the given-order strategy; variables
                outside it are taken afterwards by id

        Returns:
            The normal form and the trace of eliminated variables
        """
        trace = ReductionTrace(strategy=strategy)
        current = clause_set
        while True:
            singular = singular_variables(current)
            if not singular:
                return current, trace
            var = _pick(singular, strategy, order)
            current = dp_reduce(current, var)
            trace.steps.append(ReductionStep(variable=var, snapshot=render_body(current)))
            logger.debug("eliminated singular variable %d, n=%d", var, current.n)

    def normal_forms(self, clause_set: ClauseSet) -> Set[ClauseSet]:
        """Every exact normal form reachable by some choice sequence."""
        check_cap("normal_form_var_cap", self.normal_form_var_cap, clause_set.n)
        visited: Set[ClauseSet] = set()
        results: Set[ClauseSet] = set()
        stack = [clause_set]
        while stack:
            current = stack.pop()
            if current in visited:
                continue
            visited.add(current)
            singular = singular_variables(current)
            if not singular:
                results.add(current)
                continue
            for var in sorted(singular, reverse=True):
                stack.append(dp_reduce(current, var))
        return results

    def all_sdp_normal_forms(self, clause_set: ClauseSet) -> List[NormalFormClass]:
        """
        Normal forms of all choice sequences, grouped up to isomorphism.

        Args:
            clause_set: Input clause-set with n(F) within the exploration cap

        Returns:
            One entry per isomorphism class, ordered by (n, c, representative)
        """
        classes: Dict[ClauseSet, int] = {}
        for form in self.normal_forms(clause_set):
            canonical = self.isomorphism.canonical_form(form)
            classes[canonical] = classes.get(canonical, 0) + 1

        result = [
            NormalFormClass(
                representative=canonical.to_lists(),
                n=canonical.n,
                c=canonical.c,
                members=members,
            )
            for canonical, members in classes.items()
        ]
        result.sort(key=lambda item: (item.n, item.c, item.representative))
        return result
