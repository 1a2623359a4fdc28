# /src/core/enumeration/__init__.py

"""Catalog enumeration, extremal statistics and constant checks."""

from .catalog_io import dump_catalog, load_catalog, read_catalog, write_catalog
from .conjectures import ConstantsChecker, grade
from .enumerator import CatalogEnumerator, CellSearch, catalog_entry, entry_clause_set
from .extremal import ExtremalStatistics, UHitMaximum, uhit_conjectured_maximum
from .random_instances import (
    random_clause_set,
    random_hitting_clause_set,
    random_singular_extensions,
    singular_extension,
)
from .universe import ClauseUniverse, universe_for

__all__ = [
    "dump_catalog",
    "load_catalog",
    "read_catalog",
    "write_catalog",
    "ConstantsChecker",
    "grade",
    "CatalogEnumerator",
    "CellSearch",
    "catalog_entry",
    "entry_clause_set",
    "ExtremalStatistics",
    "UHitMaximum",
    "uhit_conjectured_maximum",
    "random_clause_set",
    "random_hitting_clause_set",
    "random_singular_extensions",
    "singular_extension",
    "ClauseUniverse",
    "universe_for",
]
