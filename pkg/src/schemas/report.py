# /src/schemas/report.py

from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field

from .common import TOOLKIT_VERSION


class Report(BaseModel):
    """Envelope printed by every CLI command."""

    command: List[str] = Field(..., description="Echo of the command line arguments")
    input_digest: Optional[str] = Field(
        None, description="SHA-256 of the canonical DIMACS rendering of the input"
    )
    results: Dict[str, Any] = Field(
        default_factory=dict, description="Command-specific results"
    )
    warnings: List[str] = Field(
        default_factory=list, description="Non-fatal diagnostics"
    )
    timing: float = Field(0.0, ge=0, description="Wall-clock seconds")
    version: str = Field(TOOLKIT_VERSION, description="Toolkit version")


class ErrorReport(BaseModel):
    kind: str = Field(..., description="Exception class name")
    message: str = Field(..., description="Diagnostic message")
    exit_code: int = Field(..., description="Process exit code")
    cap_name: Optional[str] = Field(None, description="Cap that refused the request")


class ErrorDocument(BaseModel):
    """Document printed instead of a Report when a command fails."""

    error: ErrorReport = Field(..., description="The failure")
