# /src/tools/reduction/reduce.py

from ..base import BaseTool
from core.cnf import ClauseSet
from schemas.index import ReduceInput, ReduceOutput


class ReduceTool(BaseTool[ReduceInput, ReduceOutput]):
    """Singular DP-reduction: one traced normal form, or all of them up to isomorphism."""

    input_class = ReduceInput

    def run(self, payload: ReduceInput) -> ReduceOutput:
        clause_set = ClauseSet(payload.clauses)
        reducer = self.context.reducer
        if payload.all_forms:
            return ReduceOutput(classes=reducer.all_sdp_normal_forms(clause_set))

        form, trace = reducer.sdp_normal_form(clause_set, payload.strategy, payload.order)
        return ReduceOutput(normal_form=form.to_lists(), n=form.n, c=form.c, trace=trace)
