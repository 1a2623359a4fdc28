# /src/schemas/metrics.py

from typing import List, Optional
from pydantic import BaseModel, Field


class VariableDegree(BaseModel):
    variable: int = Field(..., ge=1, description="Variable id")
    positive: int = Field(..., ge=0, description="Clauses containing the positive literal")
    negative: int = Field(..., ge=0, description="Clauses containing the negative literal")


class Metrics(BaseModel):
    """Counting summary of a clause-set."""

    n: int = Field(..., ge=0, description="Number of occurring variables n(F)")
    c: int = Field(..., ge=0, description="Number of distinct clauses c(F)")
    deficiency: int = Field(..., description="c(F) - n(F); negative for some satisfiable F")
    min_var_degree: Optional[int] = Field(
        None, description="Minimum total occurrences over var(F); absent when var(F) is empty"
    )
    max_var_degree: Optional[int] = Field(
        None, description="Maximum total occurrences over var(F)"
    )
    full_clause_count: int = Field(
        ..., ge=0, description="Number of clauses C with |C| = n(F)"
    )
    degrees: List[VariableDegree] = Field(
        default_factory=list, description="Per-variable sign degrees, ordered by variable"
    )
