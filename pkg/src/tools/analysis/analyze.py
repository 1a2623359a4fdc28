# /src/tools/analysis/analyze.py

import logging

from ..base import BaseTool
from ..convert import autarky_result
from core.cnf import ClauseSet, metrics, sorted_literals
from schemas.analysis import IrreducibilityReport
from schemas.index import AnalyzeInput, AnalyzeOutput

logger = logging.getLogger(__name__)


class AnalyzeTool(BaseTool[AnalyzeInput, AnalyzeOutput]):
    """
    Metrics plus the requested class decisions for one clause-set.
    VMU, leanness and clause-irreducibility are opt-in.
    """

    input_class = AnalyzeInput

    def run(self, payload: AnalyzeInput) -> AnalyzeOutput:
        clause_set = ClauseSet(payload.clauses)
        ctx = self.context
        output = AnalyzeOutput(
            metrics=metrics(clause_set),
            classes=ctx.analyzer.classify(
                clause_set, mu=payload.mu, hitting=payload.hitting, vmu=payload.vmu
            ),
        )

        if payload.lean:
            autarky = ctx.autarky.find_nontrivial_autarky(clause_set)
            output.is_lean = autarky is None
            if autarky is not None:
                output.autarky = autarky_result(autarky)

        if payload.irreducible:
            check = ctx.irreducibility.is_clause_irreducible(clause_set)
            output.irreducibility = IrreducibilityReport(
                is_clause_irreducible=check.is_irreducible,
                subset=check.subset.to_lists() if check.subset is not None else None,
                equivalent_clause=(
                    sorted_literals(check.clause) if check.clause is not None else None
                ),
            )

        logger.info("analyzed n=%d c=%d", clause_set.n, clause_set.c)
        return output
