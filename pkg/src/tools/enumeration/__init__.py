# /src/tools/enumeration/__init__.py

from .enumerate import EnumerateTool
from .conjectures import ConjecturesTool

__all__ = ["EnumerateTool", "ConjecturesTool"]
