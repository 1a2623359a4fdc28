# /src/workflows/report_workflow.py

import logging
import time
from typing import Any, Dict, List, Optional

from pydantic import Field, ValidationError

from .base_workflow import BaseWorkflow, WorkflowInput, WorkflowOutput
from core.cnf import canonical_digest, read_dimacs_file
from core.errors import InvalidSpecError
from schemas.config import ToolkitSettings
from schemas.report import Report
from tools import (
    AnalyzeTool,
    AutarkyTool,
    BaseTool,
    ConjecturesTool,
    EnumerateTool,
    ReduceTool,
    ToolkitContext,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1


class ReportWorkflowInput(WorkflowInput):
    command: List[str] = Field(..., description="Command line being answered")
    tool: str = Field(..., description="analyze, reduce, autarky, enumerate or conjectures")
    path: Optional[str] = Field(None, description="DIMACS input file, if the tool takes one")
    strip_tautologies: bool = Field(False, description="Drop tautological input clauses")
    options: Dict[str, Any] = Field(
        default_factory=dict, description="Tool payload fields besides the clauses"
    )


class ReportWorkflowOutput(WorkflowOutput):
    report: Report
    exit_code: int


class ReportWorkflow(BaseWorkflow):
    """
    Load the input, run one tool and wrap its output in the Report envelope.
    Errors propagate to the caller, which maps them to exit codes.
    """

    input_class = ReportWorkflowInput

    def __init__(self, settings: Optional[ToolkitSettings] = None):
        context = ToolkitContext.from_settings(settings)
        self.tools: Dict[str, BaseTool] = {
            "analyze": AnalyzeTool(context),
            "reduce": ReduceTool(context),
            "autarky": AutarkyTool(context),
            "enumerate": EnumerateTool(context),
            "conjectures": ConjecturesTool(context),
        }

    def run(self, input_data: ReportWorkflowInput) -> ReportWorkflowOutput:
        started = time.perf_counter()
        tool = self.tools[input_data.tool]
        report = Report(command=input_data.command)

        fields = dict(input_data.options)
        if input_data.path is not None:
            document = read_dimacs_file(input_data.path, input_data.strip_tautologies)
            report.warnings.extend(document.warnings)
            report.input_digest = canonical_digest(document.clause_set)
            fields["clauses"] = document.clause_set.to_lists()

        try:
            payload = tool.input_class(**fields)
        except ValidationError as e:
            raise InvalidSpecError(_validation_message(e)) from e

        output = tool.run(payload)
        report.results = output.model_dump(mode="json")

        exit_code = EXIT_OK
        if input_data.tool == "enumerate" and not output.header.exhaustive:
            report.warnings.append("node budget reached; catalog may be incomplete")
        if input_data.tool == "conjectures" and output.failed:
            exit_code = EXIT_CHECK_FAILED

        report.timing = round(time.perf_counter() - started, 6)
        logger.info("%s finished in %.3fs", input_data.tool, report.timing)
        return ReportWorkflowOutput(report=report, exit_code=exit_code)


def _validation_message(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"])
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)
