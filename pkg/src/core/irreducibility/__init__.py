# /src/core/irreducibility/__init__.py

"""Clause-irreducibility decision."""

from .irreducibility import (
    IrreducibilityCheck,
    IrreducibilityChecker,
    clause_from_falsifying_mask,
)

__all__ = ["IrreducibilityCheck", "IrreducibilityChecker", "clause_from_falsifying_mask"]
