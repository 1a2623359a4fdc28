# /src/core/analysis/__init__.py

"""Decision procedures for MU, VMU and unsatisfiable hitting clause-sets."""

from .mu import MUAnalyzer, MUCheck, VMUCheck, clause_weight

__all__ = ["MUAnalyzer", "MUCheck", "VMUCheck", "clause_weight"]
