# /src/schemas/analysis.py

from typing import List, Optional
from pydantic import BaseModel, Field

from .common import ClauseList


class ClassWitness(BaseModel):
    """Evidence disproving class membership."""

    model: Optional[List[int]] = Field(
        None, description="Satisfying assignment as a sorted literal list"
    )
    removable_clause: Optional[List[int]] = Field(
        None, description="Clause whose removal leaves the clause-set unsatisfiable"
    )
    missing_variable: Optional[int] = Field(
        None, description="Variable avoided by some unsatisfiable subset (VMU refutation)"
    )


class ClassReport(BaseModel):
    is_unsat: bool = Field(..., description="Whether the clause-set is unsatisfiable")
    is_mu: Optional[bool] = Field(None, description="Minimal unsatisfiability")
    mu_level: Optional[int] = Field(
        None, description="Deficiency when the clause-set is MU"
    )
    is_vmu: Optional[bool] = Field(
        None, description="Variable-minimal unsatisfiability (computed on request)"
    )
    is_hitting: Optional[bool] = Field(
        None, description="Every two clauses clash in some variable"
    )
    is_uhit: Optional[bool] = Field(None, description="Unsatisfiable hitting clause-set")
    witness: Optional[ClassWitness] = Field(
        None, description="Witness for the first negative answer"
    )


class IrreducibilityReport(BaseModel):
    is_clause_irreducible: bool = Field(
        ..., description="No proper subset of >= 2 clauses is equivalent to one clause"
    )
    subset: Optional[ClauseList] = Field(
        None, description="Witness sub-clause-set F'"
    )
    equivalent_clause: Optional[List[int]] = Field(
        None, description="Clause logically equivalent to the witness subset"
    )
