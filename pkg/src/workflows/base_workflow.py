# /src/workflows/base_workflow.py

from abc import ABC, abstractmethod
from typing import Any, ClassVar, Dict, Type, Union

from pydantic import BaseModel, ConfigDict


class WorkflowInput(BaseModel):
    """Base class for workflow inputs; unknown fields are rejected."""

    model_config = ConfigDict(extra="forbid")


class WorkflowOutput(BaseModel):
    """Base class for workflow outputs"""


class BaseWorkflow(ABC):
    """
    Base workflow that all other workflows inherit from.

    Calling a workflow accepts either its input model or a plain mapping,
    which is validated against `input_class` first.
    """

    input_class: ClassVar[Type[WorkflowInput]] = WorkflowInput

    @abstractmethod
    def run(self, input_data: WorkflowInput) -> WorkflowOutput:
        """Execute the workflow's main functionality"""

    def __call__(self, input_data: Union[WorkflowInput, Dict[str, Any]]) -> WorkflowOutput:
        if not isinstance(input_data, WorkflowInput):
            input_data = self.input_class.model_validate(input_data)
        return self.run(input_data)
