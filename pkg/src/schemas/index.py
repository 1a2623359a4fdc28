# /src/schemas/index.py

from typing import Dict, List, Optional
from pydantic import BaseModel, Field

from .common import AutarkyMode, ClauseList, ReductionStrategy
from .metrics import Metrics
from .analysis import ClassReport, IrreducibilityReport
from .reduction import NormalFormClass, ReductionTrace
from .autarky import AutarkyResult, SurplusReport
from .enumeration import CatalogHeader, ConstantsReport, EnumSpec


class ClauseSetInput(BaseModel):
    clauses: ClauseList = Field(
        ..., description="Input clause-set as signed-integer literal lists"
    )


class AnalyzeInput(ClauseSetInput):
    mu: bool = Field(True, description="Decide MU and its deficiency level")
    hitting: bool = Field(True, description="Decide hitting and UHit")
    vmu: bool = Field(False, description="Decide VMU (subset search)")
    lean: bool = Field(False, description="Decide leanness (autarky search)")
    irreducible: bool = Field(
        False, description="Decide clause-irreducibility (subset search)"
    )


class AnalyzeOutput(BaseModel):
    metrics: Metrics = Field(..., description="Counting parameters of the input")
    classes: ClassReport = Field(..., description="Requested class memberships")
    is_lean: Optional[bool] = Field(
        None, description="No non-trivial autarky exists (computed on request)"
    )
    autarky: Optional[AutarkyResult] = Field(
        None, description="Autarky refuting leanness"
    )
    irreducibility: Optional[IrreducibilityReport] = Field(
        None, description="Clause-irreducibility (computed on request)"
    )


class ReduceInput(ClauseSetInput):
    strategy: ReductionStrategy = Field(
        ReductionStrategy.FIRST_ID, description="Singular variable choice rule"
    )
    order: List[int] = Field(
        default_factory=list, description="Variable order for the given-order rule"
    )
    all_forms: bool = Field(
        False, description="Explore every choice sequence instead of one"
    )


class ReduceOutput(BaseModel):
    normal_form: Optional[ClauseList] = Field(
        None, description="Normal form reached by the chosen strategy"
    )
    n: Optional[int] = Field(None, description="Variables of the normal form")
    c: Optional[int] = Field(None, description="Clauses of the normal form")
    trace: Optional[ReductionTrace] = Field(
        None, description="Eliminated variables and snapshots"
    )
    classes: Optional[List[NormalFormClass]] = Field(
        None, description="All normal forms grouped up to isomorphism"
    )


class AutarkyInput(ClauseSetInput):
    mode: AutarkyMode = Field(..., description="find, kernel or surplus")
    order: Optional[List[int]] = Field(
        None, description="Variable order for the autarky search"
    )


class AutarkyOutput(BaseModel):
    mode: AutarkyMode = Field(..., description="Mode that produced the result")
    autarky: Optional[AutarkyResult] = Field(
        None, description="Non-trivial autarky found (find mode); absent when lean"
    )
    kernel: Optional[ClauseList] = Field(None, description="Lean kernel (kernel mode)")
    applied: List[AutarkyResult] = Field(
        default_factory=list, description="Autarkies applied to reach the kernel"
    )
    surplus: Optional[SurplusReport] = Field(
        None, description="Surplus and minimiser (surplus mode)"
    )


class EnumerateInput(BaseModel):
    spec: EnumSpec = Field(..., description="Enumeration parameters")
    out: Optional[str] = Field(None, description="JSON-lines catalog destination")


class EnumerateOutput(BaseModel):
    header: CatalogHeader = Field(..., description="Catalog header with cell summaries")
    counts: Dict[int, int] = Field(
        default_factory=dict, description="Entries per variable count"
    )
    entries: int = Field(..., ge=0, description="Total number of entries")
    out: Optional[str] = Field(None, description="Path the catalog was written to")


class ConjecturesInput(BaseModel):
    n_max_d1: int = Field(4, ge=1, description="Variable bound of the δ=1 catalog")
    n_max_d2: int = Field(3, ge=1, description="Variable bound of the δ=2 catalog")
    n_max_d3: int = Field(3, ge=1, description="Variable bound of the δ=3 catalog")
    n_max_uhit: int = Field(
        4, ge=1, description="Variable bound of the nonsingular UHit search"
    )
    k: int = Field(2, ge=2, description="Deficiency of the nonsingular UHit search")
    catalog_paths: List[str] = Field(
        default_factory=list, description="Catalogs replacing enumerated ones"
    )


class ConjecturesOutput(BaseModel):
    report: ConstantsReport = Field(..., description="One row per constant")
    failed: bool = Field(..., description="Some row found a counterexample")
