# /src/tools/reduction/autarky.py

from ..base import BaseTool
from ..convert import autarky_result
from core.cnf import ClauseSet
from schemas.autarky import SurplusReport
from schemas.common import AutarkyMode
from schemas.index import AutarkyInput, AutarkyOutput


class AutarkyTool(BaseTool[AutarkyInput, AutarkyOutput]):
    """Autarky search, lean-kernel reduction or surplus, selected by mode."""

    input_class = AutarkyInput

    def run(self, payload: AutarkyInput) -> AutarkyOutput:
        clause_set = ClauseSet(payload.clauses)
        finder = self.context.autarky
        output = AutarkyOutput(mode=payload.mode)

        if payload.mode == AutarkyMode.FIND:
            autarky = finder.find_nontrivial_autarky(clause_set, payload.order)
            if autarky is not None:
                output.autarky = autarky_result(autarky)
        elif payload.mode == AutarkyMode.KERNEL:
            reduction = finder.reduce_to_lean_kernel(clause_set, payload.order)
            output.kernel = reduction.kernel.to_lists()
            output.applied = [autarky_result(a) for a in reduction.autarkies]
        else:
            surplus = finder.surplus(clause_set)
            output.surplus = SurplusReport(
                surplus=surplus.surplus, witness_vars=surplus.witness_vars
            )
        return output
