# /src/tools/__init__.py

from .base import BaseTool
from .context import ToolkitContext
from .analysis import AnalyzeTool
from .reduction import AutarkyTool, ReduceTool
from .enumeration import ConjecturesTool, EnumerateTool

__all__ = [
    "BaseTool",
    "ToolkitContext",
    "AnalyzeTool",
    "AutarkyTool",
    "ReduceTool",
    "ConjecturesTool",
    "EnumerateTool",
]
