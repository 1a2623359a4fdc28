# /src/workflows/__init__.py

from .base_workflow import BaseWorkflow, WorkflowInput, WorkflowOutput
from .report_workflow import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    ReportWorkflow,
    ReportWorkflowInput,
    ReportWorkflowOutput,
)

__all__ = [
    "BaseWorkflow",
    "WorkflowInput",
    "WorkflowOutput",
    "EXIT_CHECK_FAILED",
    "EXIT_OK",
    "ReportWorkflow",
    "ReportWorkflowInput",
    "ReportWorkflowOutput",
]
