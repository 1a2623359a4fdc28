# /src/tools/analysis/__init__.py

from .analyze import AnalyzeTool

__all__ = ["AnalyzeTool"]
