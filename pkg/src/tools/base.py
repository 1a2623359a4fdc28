# /src/tools/base.py

from abc import ABC, abstractmethod
from typing import Any, Dict, Generic, Optional, TypeVar

from schemas.config import ToolkitSettings
from .context import ToolkitContext

InputT = TypeVar("InputT")
OutputT = TypeVar("OutputT")


class BaseTool(ABC, Generic[InputT, OutputT]):
    """
    Base abstract class for all MUDEF tools.

    A tool takes a strongly-typed input payload, runs core logic on it and
    returns a strongly-typed output payload, so workflows can compose tools
    without knowing their internals.
    """

    def __init__(self, context: Optional[ToolkitContext] = None):
        """
        Args:
            context: Wired core components; built from default settings if omitted
        """
        self.context = context or ToolkitContext.from_settings()

    @classmethod
    def from_settings(cls, settings: ToolkitSettings) -> "BaseTool":
        return cls(ToolkitContext.from_settings(settings))

    @abstractmethod
    def run(self, payload: InputT) -> OutputT:  # pragma: no cover
        """
        Transform an input schema instance into an output schema instance.

        Args:
            payload: Input data conforming to the tool's input schema

        Returns:
            Output data conforming to the tool's output schema
        """
        raise NotImplementedError

    def get_config(self) -> Dict[str, Any]:
        """
        Return the tool's configuration.

        Returns:
            The tool name and the caps it runs under
        """
        return {
            "name": self.__class__.__name__,
            "settings": self.context.settings.model_dump(),
        }
