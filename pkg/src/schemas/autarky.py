# /src/schemas/autarky.py

from typing import List
from pydantic import BaseModel, Field

from .common import ClauseList


class AutarkyResult(BaseModel):
    autarky: List[int] = Field(
        ..., min_length=1, description="Autarky as a sorted literal list"
    )
    touched: ClauseList = Field(
        ..., description="Clauses containing a bound variable; all are satisfied"
    )


class SurplusReport(BaseModel):
    surplus: int = Field(..., description="min over non-empty V of |F_V| - |V|")
    witness_vars: List[int] = Field(
        ..., min_length=1, description="Smallest, then lexicographically first, minimiser"
    )
