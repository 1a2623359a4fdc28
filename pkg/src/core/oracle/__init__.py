# /src/core/oracle/__init__.py

"""Satisfiability oracle and exhaustive truth tables."""

from .solver import SatOracle, TruthTable

__all__ = ["SatOracle", "TruthTable"]
