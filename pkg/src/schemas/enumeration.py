# /src/schemas/enumeration.py

from typing import List, Literal, Optional
from pydantic import BaseModel, Field

from .common import CheckStatus, ClauseList, TOOLKIT_VERSION


class EnumSpec(BaseModel):
    """Parameters of one MU(δ=k) or UHit(δ=k) enumeration."""

    n_max: int = Field(..., ge=0, description="Maximum number of variables")
    deficiency: int = Field(
        ..., ge=1, description="Target deficiency; Tarsi's Lemma empties every k < 1"
    )
    require_hitting: bool = Field(False, description="Only hitting clause-sets")
    require_nonsingular: bool = Field(
        False, description="Only clause-sets without singular variables"
    )


class EntryFlags(BaseModel):
    hitting: bool = Field(..., description="Entry is a hitting clause-set")
    nonsingular: bool = Field(..., description="Entry has no singular variable")


class CatalogEntry(BaseModel):
    kind: Literal["entry"] = "entry"
    clauses: ClauseList = Field(..., description="Canonical clause list")
    n: int = Field(..., ge=0, description="Number of variables")
    c: int = Field(..., ge=0, description="Number of clauses")
    deficiency: int = Field(..., description="c - n")
    min_var_degree: Optional[int] = Field(None, description="Minimum variable degree")
    full_clause_count: int = Field(..., ge=0, description="Number of full clauses")
    flags: EntryFlags = Field(..., description="Structural flags")


class CellSummary(BaseModel):
    n: int = Field(..., ge=0, description="Variable count of the cell")
    count: int = Field(..., ge=0, description="Classes found in the cell")
    nodes: int = Field(..., ge=0, description="Search nodes visited")
    exhaustive: bool = Field(..., description="Cell finished within the node budget")


class CatalogHeader(BaseModel):
    kind: Literal["header"] = "header"
    spec: EnumSpec = Field(..., description="Enumeration parameters")
    cells: List[CellSummary] = Field(
        default_factory=list, description="Per-n search summary"
    )
    exhaustive: bool = Field(..., description="Every cell completed within bounds")
    version: str = Field(TOOLKIT_VERSION, description="Toolkit version")


class Catalog(BaseModel):
    header: CatalogHeader = Field(..., description="Spec, bounds and provenance")
    entries: List[CatalogEntry] = Field(
        default_factory=list, description="Pairwise non-isomorphic representatives"
    )

    @property
    def spec(self) -> EnumSpec:
        return self.header.spec

    @property
    def exhaustive(self) -> bool:
        return self.header.exhaustive


class ExtremalValue(BaseModel):
    value: int = Field(..., description="Maximum found")
    witness: ClauseList = Field(..., description="Entry attaining the maximum")


class ConstantCheck(BaseModel):
    name: str = Field(..., description="Constant or property checked, e.g. 'muNM(2)'")
    expected: Optional[int] = Field(
        None, description="Published value or upper bound"
    )
    bound: str = Field(..., description="Searched bounds, human-readable")
    value: Optional[int] = Field(None, description="Value found within bounds")
    witness: Optional[ClauseList] = Field(None, description="Witness entry")
    status: CheckStatus = Field(..., description="pass / partial / fail / skipped")
    note: Optional[str] = Field(None, description="Reason for partial or skipped")


class ConstantsReport(BaseModel):
    checks: List[ConstantCheck] = Field(
        default_factory=list, description="One row per constant or property"
    )

    @property
    def failed(self) -> bool:
        return any(check.status == CheckStatus.FAIL for check in self.checks)
