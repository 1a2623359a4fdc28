# /src/core/enumeration/conjectures.py

"""Checks of the published deficiency constants against desk-scale catalogs."""

import logging
import random
from typing import Dict, List, Optional, Sequence, Tuple

from schemas.common import CheckStatus
from schemas.enumeration import (
    Catalog,
    CatalogEntry,
    ConstantCheck,
    ConstantsReport,
    EnumSpec,
    ExtremalValue,
)
from ..analysis.mu import MUAnalyzer
from ..cnf.clause_set import ClauseSet
from ..cnf.metrics import full_clause_count, is_hitting, min_var_degree
from ..errors import MudefError
from ..reduction.dp import Reducer, singular_variables
from ..reduction.isomorphism import IsomorphismChecker
from .enumerator import CatalogEnumerator, entry_clause_set
from .extremal import ExtremalStatistics, uhit_conjectured_maximum
from .random_instances import random_singular_extensions

logger = logging.getLogger(__name__)

MIN_DEGREE_CONSTANTS = {1: 2, 2: 4, 3: 5}
FULL_CLAUSE_CONSTANTS = {1: 2, 2: 4, 3: 4}

# (deficiency, require_hitting, require_nonsingular)
CatalogKey = Tuple[int, bool, bool]


def catalog_key(spec: EnumSpec) -> CatalogKey:
    return (spec.deficiency, spec.require_hitting, spec.require_nonsingular)


def catalog_label(spec: EnumSpec) -> str:
    label = f"δ={spec.deficiency}"
    if spec.require_hitting:
        label += " hitting"
    if spec.require_nonsingular:
        label += " nonsingular"
    return label


def cell_bound(n_max: int, deficiency: int) -> str:
    return f"n <= {n_max}, c = n + {deficiency}"


def grade(value: Optional[int], expected: int) -> CheckStatus:
    """
    Compare a maximum found within bounds with a published value.

    Exceeding the value is a genuine discrepancy; falling short only means
    the bounds did not reach a witness.
    """
    if value is None:
        return CheckStatus.SKIPPED
    if value > expected:
        return CheckStatus.FAIL
    if value == expected:
        return CheckStatus.PASS
    return CheckStatus.PARTIAL


class ConstantsChecker:
    """Aggregates extremal statistics, catalog re-verification and confluence sweeps."""

    def __init__(
        self,
        enumerator: Optional[CatalogEnumerator] = None,
        analyzer: Optional[MUAnalyzer] = None,
        reducer: Optional[Reducer] = None,
        isomorphism: Optional[IsomorphismChecker] = None,
        confluence_samples: int = 50,
        confluence_max_n: int = 8,
        seed: int = 0,
    ):
        """
        Args:
            enumerator: Source of the catalogs not supplied by the caller
            analyzer: MU decisions for the post-hoc catalog verification
            reducer: sDP normal-form exploration for the confluence sweeps
            isomorphism: Canonical forms for the isomorph-freeness check
            confluence_samples: Singular extensions drawn per confluence sweep
            confluence_max_n: Largest variable count of an extension
            seed: Seed of the confluence sample generator
        """
        self.enumerator = enumerator or CatalogEnumerator()
        self.analyzer = analyzer or MUAnalyzer()
        self.isomorphism = isomorphism or self.enumerator.isomorphism
        self.reducer = reducer or Reducer(isomorphism=self.isomorphism)
        self.extremal = ExtremalStatistics(self.enumerator)
        self.confluence_samples = confluence_samples
        self.confluence_max_n = confluence_max_n
        self.seed = seed

    def check_constants(
        self,
        n_max_d1: int = 4,
        n_max_d2: int = 3,
        n_max_d3: int = 3,
        n_max_uhit: int = 4,
        k: int = 2,
        catalogs: Sequence[Catalog] = (),
    ) -> ConstantsReport:
        """
        Run every constant check.

        Args:
            n_max_d1: Variable bound of the δ=1 catalog
            n_max_d2: Variable bound of the δ=2 catalog
            n_max_d3: Variable bound of the δ=3 catalog
            n_max_uhit: Variable bound of the nonsingular UHit search
            k: Deficiency of the nonsingular UHit search
            catalogs: Supplied catalogs; each replaces the enumerated catalog
                with the same deficiency and class flags

        Returns:
            One row per constant or property; sub-checks that are refused
            become skipped rows
        """
        report = ConstantsReport()
        supplied: Dict[CatalogKey, Catalog] = {catalog_key(c.spec): c for c in catalogs}
        bounds = {1: n_max_d1, 2: n_max_d2, 3: n_max_d3}

        general: Dict[int, Catalog] = {}
        for deficiency, n_max in bounds.items():
            spec = EnumSpec(n_max=n_max, deficiency=deficiency)
            catalog, note = self._catalog(spec, supplied)
            if catalog is None:
                report.checks.append(ConstantCheck(
                    name=f"catalog {catalog_label(spec)}",
                    bound=cell_bound(n_max, deficiency),
                    status=CheckStatus.SKIPPED,
                    note=note,
                ))
                continue
            general[deficiency] = catalog

        uhit_spec = EnumSpec(
            n_max=n_max_uhit, deficiency=k, require_hitting=True, require_nonsingular=True
        )
        uhit_catalog, uhit_note = self._catalog(uhit_spec, supplied)

        verified = list(general.values())
        if uhit_catalog is not None:
            verified.append(uhit_catalog)
        for catalog in supplied.values():
            if all(catalog is not other for other in verified):
                verified.append(catalog)
        for catalog in verified:
            report.checks.append(self.verify_catalog(catalog))

        report.checks.append(self._tarsi(verified))
        for deficiency, catalog in general.items():
            report.checks.extend(self._extremal_rows(deficiency, catalog))
        if 3 in general:
            report.checks.append(self._sign_degree(general[3]))
        report.checks.append(self._uhit_row(k, n_max_uhit, uhit_catalog, uhit_note))
        report.checks.extend(self._confluence_rows(general))

        logger.info(
            "constant checks: %s",
            ", ".join(f"{c.name}={c.status.value}" for c in report.checks),
        )
        return report

    def _catalog(
        self, spec: EnumSpec, supplied: Dict[CatalogKey, Catalog]
    ) -> Tuple[Optional[Catalog], Optional[str]]:
        if catalog_key(spec) in supplied:
            return supplied[catalog_key(spec)], None
        try:
            return self.enumerator.enumerate(spec), None
        except MudefError as e:
            logger.warning("enumeration of %s refused: %s", catalog_label(spec), e)
            return None, str(e)

    def verify_catalog(self, catalog: Catalog) -> ConstantCheck:
        """
        Re-check every entry: MU, deficiency, class flags, recorded statistics
        and pairwise non-isomorphism.
        """
        spec = catalog.spec
        row = ConstantCheck(
            name=f"catalog {catalog_label(spec)}",
            bound=cell_bound(spec.n_max, spec.deficiency),
            value=len(catalog.entries),
            status=CheckStatus.PASS,
        )
        seen = set()
        try:
            for entry in catalog.entries:
                clause_set = entry_clause_set(entry)
                problem = self._entry_problem(spec, entry, clause_set)
                if problem is None:
                    form = self.isomorphism.canonical_form(clause_set)
                    if form in seen:
                        problem = "isomorphic to an earlier entry"
                    seen.add(form)
                if problem is not None:
                    row.status = CheckStatus.FAIL
                    row.witness = entry.clauses
                    row.note = problem
                    return row
        except MudefError as e:
            row.status = CheckStatus.SKIPPED
            row.note = str(e)
            return row
        if not catalog.exhaustive:
            row.note = "node budget reached; catalog may be incomplete"
        return row

    def _entry_problem(
        self, spec: EnumSpec, entry: CatalogEntry, clause_set: ClauseSet
    ) -> Optional[str]:
        if clause_set.deficiency != spec.deficiency or entry.deficiency != spec.deficiency:
            return f"deficiency {clause_set.deficiency} != {spec.deficiency}"
        if clause_set.n > spec.n_max:
            return f"n={clause_set.n} exceeds n_max={spec.n_max}"
        if entry.n != clause_set.n or entry.c != clause_set.c:
            return "recorded n or c disagrees with the clauses"
        if entry.min_var_degree != min_var_degree(clause_set):
            return "recorded min_var_degree disagrees with the clauses"
        if entry.full_clause_count != full_clause_count(clause_set):
            return "recorded full_clause_count disagrees with the clauses"
        if spec.require_hitting and not is_hitting(clause_set):
            return "entry is not hitting"
        if spec.require_nonsingular and singular_variables(clause_set):
            return "entry has a singular variable"
        if not self.analyzer.is_minimally_unsatisfiable(clause_set).is_mu:
            return "entry is not minimally unsatisfiable"
        return None

    def _tarsi(self, catalogs: List[Catalog]) -> ConstantCheck:
        row = ConstantCheck(
            name="tarsi", expected=1, bound="all catalogs", status=CheckStatus.PASS
        )
        lowest: Optional[int] = None
        for catalog in catalogs:
            for entry in catalog.entries:
                clause_set = entry_clause_set(entry)
                if clause_set.deficiency >= 1:
                    if lowest is None or clause_set.deficiency < lowest:
                        lowest = clause_set.deficiency
                    continue
                try:
                    is_mu = self.analyzer.is_minimally_unsatisfiable(clause_set).is_mu
                except MudefError:
                    continue
                if is_mu:
                    row.status = CheckStatus.FAIL
                    row.value = clause_set.deficiency
                    row.witness = entry.clauses
                    row.note = "MU entry with deficiency below 1"
                    return row
        row.value = lowest
        return row

    def _extremal_rows(self, deficiency: int, catalog: Catalog) -> List[ConstantCheck]:
        bound = cell_bound(catalog.spec.n_max, deficiency)
        fc_expected = FULL_CLAUSE_CONSTANTS[deficiency]
        rows = [
            self._extremal_row(
                f"muNM({deficiency})", MIN_DEGREE_CONSTANTS[deficiency], bound,
                lambda: self.extremal.max_min_var_degree(catalog),
            ),
            self._extremal_row(
                f"FC({deficiency})", fc_expected, bound,
                lambda: self.extremal.max_full_clauses(catalog),
            ),
        ]
        hitting = self._extremal_row(
            f"FC_H({deficiency}) <= FC({deficiency})", fc_expected, bound,
            lambda: self.extremal.max_full_clauses_hitting(catalog),
        )
        if hitting.status == CheckStatus.PARTIAL:
            hitting.status = CheckStatus.PASS
            hitting.note = None
        rows.append(hitting)
        return rows

    def _extremal_row(self, name: str, expected: int, bound: str, compute) -> ConstantCheck:
        try:
            found: ExtremalValue = compute()
        except MudefError as e:
            return ConstantCheck(
                name=name, expected=expected, bound=bound,
                status=CheckStatus.SKIPPED, note=str(e),
            )
        status = grade(found.value, expected)
        note = None
        if status == CheckStatus.PARTIAL:
            note = f"no witness of value {expected} within bounds"
        elif status == CheckStatus.FAIL:
            note = f"value exceeds the published {expected}"
        return ConstantCheck(
            name=name, expected=expected, bound=bound, value=found.value,
            witness=found.witness, status=status, note=note,
        )

    def _sign_degree(self, catalog: Catalog) -> ConstantCheck:
        violations = self.extremal.sign_degree_violations(catalog)
        row = ConstantCheck(
            name="sign-degree(3)",
            bound=cell_bound(catalog.spec.n_max, 3),
            value=len(violations),
            status=CheckStatus.PASS if not violations else CheckStatus.FAIL,
        )
        if violations:
            row.witness = violations[0].clauses
            row.note = "no variable with sign degrees at most (3, 2)"
        return row

    def _uhit_row(
        self, k: int, n_max: int, catalog: Optional[Catalog], refusal: Optional[str]
    ) -> ConstantCheck:
        expected = uhit_conjectured_maximum(k) if k >= 2 else None
        row = ConstantCheck(
            name=f"uhit-nonsingular-max-n({k})",
            expected=expected,
            bound=cell_bound(n_max, k) + ", hitting, nonsingular",
            status=CheckStatus.SKIPPED,
        )
        if catalog is None:
            row.note = refusal
            return row
        try:
            found = self.extremal.max_nonsingular_uhit_vars(k, n_max, catalog)
        except MudefError as e:
            row.note = str(e)
            return row
        row.value = found.value
        row.witness = found.witness.clauses if found.witness is not None else None
        notes = [found.note] if found.note else []
        if found.value is None:
            row.status = CheckStatus.PARTIAL
            notes.append("no instance within bounds")
        else:
            row.status = grade(found.value, expected)
        if not found.exhaustive:
            notes.append("node budget reached")
        row.note = "; ".join(notes) or None
        return row

    def _confluence_rows(self, general: Dict[int, Catalog]) -> List[ConstantCheck]:
        sources = [
            entry_clause_set(entry)
            for deficiency in sorted(general)
            for entry in general[deficiency].entries
            if entry.n < self.confluence_max_n
        ]
        bound = f"{self.confluence_samples} singular extensions, n <= {self.confluence_max_n}"
        size_row = ConstantCheck(name="confluence-n", bound=bound, status=CheckStatus.PASS)
        type_row = ConstantCheck(
            name="confluence-type(2)", bound=bound, status=CheckStatus.PASS
        )
        if not sources:
            for row in (size_row, type_row):
                row.status = CheckStatus.SKIPPED
                row.note = "no catalog entries to extend"
            return [size_row, type_row]

        rng = random.Random(self.seed)
        size_checked = 0
        type_checked = 0
        try:
            for _ in range(self.confluence_samples):
                instance = random_singular_extensions(
                    rng, rng.choice(sources), self.confluence_max_n
                )
                classes = self.reducer.all_sdp_normal_forms(instance)
                size_checked += 1
                if len({cls.n for cls in classes}) != 1 and size_row.status == CheckStatus.PASS:
                    size_row.status = CheckStatus.FAIL
                    size_row.witness = instance.to_lists()
                    size_row.note = "normal forms differ in variable count"
                if instance.deficiency == 2:
                    type_checked += 1
                    if len(classes) != 1 and type_row.status == CheckStatus.PASS:
                        type_row.status = CheckStatus.FAIL
                        type_row.witness = instance.to_lists()
                        type_row.note = "normal forms fall into several isomorphism classes"
        except MudefError as e:
            for row in (size_row, type_row):
                row.status = CheckStatus.SKIPPED
                row.note = str(e)
            return [size_row, type_row]

        size_row.value = size_checked
        type_row.value = type_checked
        if type_checked == 0:
            type_row.status = CheckStatus.SKIPPED
            type_row.note = "no deficiency-2 instances drawn"
        return [size_row, type_row]
