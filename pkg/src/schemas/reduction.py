# /src/schemas/reduction.py

from typing import Dict, List
from pydantic import BaseModel, Field

from .common import ClauseList, ReductionStrategy


class ReductionStep(BaseModel):
    variable: int = Field(..., ge=1, description="Eliminated singular variable")
    snapshot: str = Field(
        ..., description="Clause-set after the step, as a canonical DIMACS body"
    )


class ReductionTrace(BaseModel):
    strategy: ReductionStrategy = Field(
        ReductionStrategy.FIRST_ID, description="Rule used to pick singular variables"
    )
    steps: List[ReductionStep] = Field(
        default_factory=list, description="Steps in application order"
    )


class SignedRenaming(BaseModel):
    """Variable bijection composed with per-variable sign flips."""

    mapping: Dict[int, int] = Field(
        ..., description="Source variable -> target variable"
    )
    flips: List[int] = Field(
        default_factory=list,
        description="Source variables whose sign is inverted, sorted",
    )


class NormalFormClass(BaseModel):
    representative: ClauseList = Field(
        ..., description="Canonical form of the isomorphism class"
    )
    n: int = Field(..., ge=0, description="Variables of the normal form")
    c: int = Field(..., ge=0, description="Clauses of the normal form")
    members: int = Field(
        ..., ge=1, description="Distinct exact normal forms falling into this class"
    )
