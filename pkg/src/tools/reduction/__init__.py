# /src/tools/reduction/__init__.py

from .reduce import ReduceTool
from .autarky import AutarkyTool

__all__ = ["ReduceTool", "AutarkyTool"]
