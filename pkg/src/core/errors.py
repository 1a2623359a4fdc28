# /src/core/errors.py

"""Exception hierarchy shared by every MUDEF module."""

from typing import Optional


class MudefError(Exception):
    """Base class for all toolkit errors."""


class DimacsParseError(MudefError, ValueError):
    """Raised when DIMACS input cannot be read."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TautologyError(DimacsParseError):
    """A clause contains a variable in both signs."""

    def __init__(self, clause_index: int, line: Optional[int] = None):
        self.clause_index = clause_index
        super().__init__(f"tautological clause #{clause_index}", line)


class PreconditionError(MudefError, ValueError):
    """An operation was called outside its domain."""


class InvalidSpecError(PreconditionError):
    """An enumeration spec violates its invariants or bounds."""


class CapExceededError(MudefError):
    """
    A configured size cap refused the request.

    Args:
        cap_name: Name of the setting that imposed the limit
        limit: Configured value of the cap
        actual: Size of the rejected input
    """

    def __init__(self, cap_name: str, limit: int, actual: int):
        self.cap_name = cap_name
        self.limit = limit
        self.actual = actual
        super().__init__(f"{cap_name} exceeded: {actual} > {limit}")


def check_cap(cap_name: str, limit: int, actual: int) -> None:
    if actual > limit:
        raise CapExceededError(cap_name, limit, actual)


class CatalogFormatError(MudefError, ValueError):
    """A JSON-lines catalog is malformed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"catalog line {line}: {message}"
        super().__init__(message)
