# /src/tools/context.py

from dataclasses import dataclass
from typing import Optional

from schemas.config import ToolkitSettings
from core.oracle import SatOracle
from core.analysis import MUAnalyzer
from core.reduction import IsomorphismChecker, Reducer
from core.autarky import AutarkyFinder
from core.irreducibility import IrreducibilityChecker
from core.enumeration import CatalogEnumerator, ConstantsChecker, ExtremalStatistics


@dataclass
class ToolkitContext:
    """Core components wired from one ToolkitSettings instance."""

    settings: ToolkitSettings
    oracle: SatOracle
    analyzer: MUAnalyzer
    isomorphism: IsomorphismChecker
    reducer: Reducer
    autarky: AutarkyFinder
    irreducibility: IrreducibilityChecker
    enumerator: CatalogEnumerator
    extremal: ExtremalStatistics
    constants: ConstantsChecker

    @classmethod
    def from_settings(cls, settings: Optional[ToolkitSettings] = None) -> "ToolkitContext":
        settings = settings or ToolkitSettings()
        oracle = SatOracle(
            var_cap=settings.sat_var_cap, model_var_cap=settings.model_var_cap
        )
        analyzer = MUAnalyzer(oracle, vmu_clause_cap=settings.vmu_clause_cap)
        isomorphism = IsomorphismChecker(
            var_cap=settings.isomorphism_var_cap,
            frontier_cap=settings.canonical_frontier_cap,
        )
        reducer = Reducer(isomorphism, normal_form_var_cap=settings.normal_form_var_cap)
        enumerator = CatalogEnumerator(
            isomorphism,
            general_n_max=settings.enum_general_n_max,
            hitting_n_max=settings.enum_hitting_n_max,
            max_deficiency=settings.enum_max_deficiency,
            node_budget=settings.enum_node_budget,
            workers=settings.workers,
        )
        return cls(
            settings=settings,
            oracle=oracle,
            analyzer=analyzer,
            isomorphism=isomorphism,
            reducer=reducer,
            autarky=AutarkyFinder(
                oracle,
                var_cap=settings.autarky_var_cap,
                surplus_var_cap=settings.surplus_var_cap,
            ),
            irreducibility=IrreducibilityChecker(
                oracle,
                equivalence_var_cap=settings.equivalence_var_cap,
                clause_cap=settings.irreducibility_clause_cap,
            ),
            enumerator=enumerator,
            extremal=ExtremalStatistics(enumerator),
            constants=ConstantsChecker(
                enumerator, analyzer=analyzer, reducer=reducer, isomorphism=isomorphism
            ),
        )
