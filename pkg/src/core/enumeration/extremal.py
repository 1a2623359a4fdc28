# /src/core/enumeration/extremal.py

"""Extremal statistics over catalogs: μnM(k), FC(k), FC_H(k) and nonsingular UHit size."""

import logging
from typing import Callable, List, NamedTuple, Optional

from schemas.enumeration import Catalog, CatalogEntry, EnumSpec, ExtremalValue
from ..errors import PreconditionError
from .enumerator import CatalogEnumerator

logger = logging.getLogger(__name__)


class UHitMaximum(NamedTuple):
    value: Optional[int]
    exhaustive: bool
    witness: Optional[CatalogEntry] = None
    note: Optional[str] = None


def uhit_conjectured_maximum(k: int) -> int:
    return 4 * k - 5


def _maximum(entries: List[CatalogEntry], statistic: Callable[[CatalogEntry], int],
             name: str) -> ExtremalValue:
    if not entries:
        raise PreconditionError(f"{name} needs a non-empty catalog")
    best = entries[0]
    for entry in entries[1:]:
        if statistic(entry) > statistic(best):
            best = entry
    return ExtremalValue(value=statistic(best), witness=best.clauses)


class ExtremalStatistics:
    """Maxima over catalog entries; the witness is the first maximiser in catalog order."""

    def __init__(self, enumerator: Optional[CatalogEnumerator] = None):
        self.enumerator = enumerator or CatalogEnumerator()

    def max_min_var_degree(self, catalog: Catalog) -> ExtremalValue:
        return _maximum(catalog.entries, lambda e: e.min_var_degree or 0, "max_min_var_degree")

    def max_full_clauses(self, catalog: Catalog) -> ExtremalValue:
        return _maximum(catalog.entries, lambda e: e.full_clause_count, "max_full_clauses")

    def max_full_clauses_hitting(self, catalog: Catalog) -> ExtremalValue:
        """FC_H: full clauses maximised over the hitting entries only."""
        hitting = [entry for entry in catalog.entries if entry.flags.hitting]
        return _maximum(hitting, lambda e: e.full_clause_count, "max_full_clauses_hitting")

    def sign_degree_violations(self, catalog: Catalog) -> List[CatalogEntry]:
        """
        Entries without a variable occurring at most 3 times in one sign and
        at most 2 times in the other.
        """
        violations = []
        for entry in catalog.entries:
            positive = {}
            negative = {}
            for clause in entry.clauses:
                for lit in clause:
                    counts = positive if lit > 0 else negative
                    counts[abs(lit)] = counts.get(abs(lit), 0) + 1
            variables = set(positive) | set(negative)
            if not any(
                min(positive.get(v, 0), negative.get(v, 0)) <= 2
                and max(positive.get(v, 0), negative.get(v, 0)) <= 3
                for v in variables
            ):
                violations.append(entry)
        return violations

    def max_nonsingular_uhit_vars(
        self, k: int, n_max: int, catalog: Optional[Catalog] = None
    ) -> UHitMaximum:
        """
        Largest n ≤ n_max with a nonsingular UHit clause-set of deficiency k.

        Args:
            k: Deficiency, at least 2
            n_max: Variable bound of the search
            catalog: Precomputed hitting and nonsingular catalog to use instead

        Returns:
            The maximum (None when nothing was found), whether every cell was
            exhausted, a witness and a note when the bound cannot reach 4k-5
        """
        if k < 2:
            raise PreconditionError("nonsingular UHit maximum is considered for k >= 2")
        if catalog is None:
            spec = EnumSpec(
                n_max=n_max, deficiency=k, require_hitting=True, require_nonsingular=True
            )
            catalog = self.enumerator.enumerate(spec)

        witness = None
        for entry in catalog.entries:
            if witness is None or entry.n > witness.n:
                witness = entry
        note = None
        target = uhit_conjectured_maximum(k)
        if n_max < target:
            note = f"n_max={n_max} is below 4k-5={target}; the check is vacuous"
        value = witness.n if witness is not None else None
        logger.info("nonsingular UHit δ=%d up to n=%d: max n %s", k, n_max, value)
        return UHitMaximum(value, catalog.exhaustive, witness, note)
