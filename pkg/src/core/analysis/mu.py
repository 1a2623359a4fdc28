# /src/core/analysis/mu.py

"""Membership tests for MU, MU(δ=k), VMU and UHit."""

import logging
from fractions import Fraction
from typing import Dict, NamedTuple, Optional

from schemas.analysis import ClassReport, ClassWitness
from ..cnf.clause_set import Clause, ClauseSet, assignment_literals, sorted_literals
from ..cnf.metrics import is_hitting
from ..errors import check_cap
from ..oracle.solver import SatOracle

logger = logging.getLogger(__name__)


class MUCheck(NamedTuple):
    """Outcome of the MU decision with its witness."""

    is_mu: bool
    model: Optional[Dict[int, bool]] = None  # set when F is satisfiable
    removable: Optional[Clause] = None  # set when F is unsatisfiable but not MU


class VMUCheck(NamedTuple):
    is_vmu: bool
    model: Optional[Dict[int, bool]] = None
    missing_variable: Optional[int] = None
    unsat_subset: Optional[ClauseSet] = None


def clause_weight(clause_set: ClauseSet) -> Fraction:
    """Exact sum of 2^-|C| over all clauses."""
    return sum((Fraction(1, 1 << len(c)) for c in clause_set.clauses), Fraction(0))


class MUAnalyzer:
    """
    Brute-force decisions for the deficiency-layered MU classes.

    MU costs c+1 oracle calls; VMU costs n+1; UHit uses the exact weight
    criterion and never calls the oracle.
    """

    def __init__(self, oracle: Optional[SatOracle] = None, vmu_clause_cap: int = 16):
        """
        Args:
            oracle: Satisfiability oracle; a default one is created if omitted
            vmu_clause_cap: Largest c(F) accepted by is_vmu
        """
        self.oracle = oracle or SatOracle()
        self.vmu_clause_cap = vmu_clause_cap

    def is_minimally_unsatisfiable(self, clause_set: ClauseSet) -> MUCheck:
        """
        Decide F ∈ MU.

        Args:
            clause_set: Clause-set within the oracle caps

        Returns:
            MUCheck; on a negative answer either the model or a removable clause
        """
        return self._mu_given(clause_set, self.oracle.find_model(clause_set))

    def _mu_given(self, clause_set: ClauseSet, model: Optional[Dict[int, bool]]) -> MUCheck:
        if model is not None:
            return MUCheck(False, model=model)
        for clause in clause_set.sorted_clauses():
            if not self.oracle.is_satisfiable(clause_set.without(clause)):
                logger.debug("clause %s is removable", sorted_literals(clause))
                return MUCheck(False, removable=clause)
        return MUCheck(True)

    def mu_level(self, clause_set: ClauseSet) -> Optional[int]:
        if self.is_minimally_unsatisfiable(clause_set).is_mu:
            return clause_set.deficiency
        return None

    def is_vmu(self, clause_set: ClauseSet) -> VMUCheck:
        """
        Decide variable-minimal unsatisfiability.

        Some unsatisfiable F' ⊆ F avoids variable v iff the clauses of F not
        containing v are already unsatisfiable, so n+1 oracle calls suffice.

        Args:
            clause_set: Clause-set with c(F) within the VMU cap

        Returns:
            VMUCheck with a model or an avoided variable on a negative answer
        """
        check_cap("vmu_clause_cap", self.vmu_clause_cap, clause_set.c)
        return self._vmu_given(clause_set, self.oracle.find_model(clause_set))

    def _vmu_given(self, clause_set: ClauseSet, model: Optional[Dict[int, bool]]) -> VMUCheck:
        if model is not None:
            return VMUCheck(False, model=model)
        for var in sorted(clause_set.variables):
            avoiding = ClauseSet.from_clauses(
                c for c in clause_set.clauses if var not in c and -var not in c
            )
            if not self.oracle.is_satisfiable(avoiding):
                return VMUCheck(False, missing_variable=var, unsat_subset=avoiding)
        return VMUCheck(True)

    def is_unsat_hitting(self, clause_set: ClauseSet) -> bool:
        """Hitting and Σ 2^-|C| = 1, in exact dyadic arithmetic."""
        return is_hitting(clause_set) and clause_weight(clause_set) == 1

    def classify(self, clause_set: ClauseSet, mu: bool = True, hitting: bool = True,
                 vmu: bool = False) -> ClassReport:
        """
        Assemble a ClassReport for the requested classes.

        F itself goes to the oracle at most once. A hitting-only request on a
        hitting clause-set is settled by the weight criterion and reports no
        model.

        Args:
            clause_set: Clause-set to classify
            mu: Decide MU and its level
            hitting: Decide hitting / UHit
            vmu: Decide VMU (expensive)

        Returns:
            ClassReport with the first negative witness found
        """
        if vmu:
            check_cap("vmu_clause_cap", self.vmu_clause_cap, clause_set.c)
        hitting_set = is_hitting(clause_set) if hitting else None
        model: Optional[Dict[int, bool]] = None
        if mu or vmu or not hitting_set:
            model = self.oracle.find_model(clause_set)
            is_unsat = model is None
        else:
            is_unsat = self.is_unsat_hitting(clause_set)

        witness: Optional[ClassWitness] = None
        report = ClassReport(is_unsat=is_unsat)
        if model is not None:
            witness = ClassWitness(model=assignment_literals(model))

        if mu:
            check = self._mu_given(clause_set, model)
            report.is_mu = check.is_mu
            report.mu_level = clause_set.deficiency if check.is_mu else None
            if check.removable is not None and witness is None:
                witness = ClassWitness(removable_clause=sorted_literals(check.removable))

        if hitting:
            report.is_hitting = hitting_set
            report.is_uhit = bool(hitting_set) and is_unsat

        if vmu:
            vcheck = self._vmu_given(clause_set, model)
            report.is_vmu = vcheck.is_vmu
            if vcheck.missing_variable is not None and witness is None:
                witness = ClassWitness(missing_variable=vcheck.missing_variable)

        report.witness = witness
        return report
