# /src/core/__init__.py

"""Core modules for the MUDEF toolkit."""

from .cnf import ClauseSet, load_dimacs, parse_dimacs, render_dimacs
from .oracle import SatOracle
from .analysis import MUAnalyzer
from .reduction import IsomorphismChecker, Reducer
from .autarky import AutarkyFinder
from .irreducibility import IrreducibilityChecker
from .enumeration import CatalogEnumerator, ConstantsChecker, ExtremalStatistics
