# /src/schemas/config.py

import os
from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field

CONFIG_ENV = "MUDEF_CONFIG"
WORKERS_ENV = "MUDEF_WORKERS"


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


class ToolkitSettings(BaseModel):
    """Size caps and parallelism shared by all analyses."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    sat_var_cap: int = Field(
        40, ge=0, description="Maximum n(F) accepted by the satisfiability oracle"
    )
    model_var_cap: int = Field(
        20, ge=0, description="Maximum |V| for exhaustive model enumeration"
    )
    vmu_clause_cap: int = Field(
        16, ge=0, description="Maximum c(F) for the VMU decision"
    )
    normal_form_var_cap: int = Field(
        12, ge=0, description="Maximum n(F) for exploring all sDP normal forms"
    )
    isomorphism_var_cap: int = Field(
        12, ge=0, description="Maximum n for isomorphism tests and canonical forms"
    )
    canonical_frontier_cap: int = Field(
        200_000,
        ge=1,
        description="Maximum number of partial renamings kept during canonical labelling",
    )
    autarky_var_cap: int = Field(
        20, ge=0, description="Maximum n(F) for autarky search and lean kernels"
    )
    surplus_var_cap: int = Field(
        20, ge=0, description="Maximum n(F) for brute-force surplus minimisation"
    )
    equivalence_var_cap: int = Field(
        16, ge=0, description="Maximum n(F') for single-clause equivalence"
    )
    irreducibility_clause_cap: int = Field(
        16, ge=0, description="Maximum c(F) for clause-irreducibility subset search"
    )
    enum_general_n_max: int = Field(
        4, ge=1, description="Largest n_max accepted for general MU enumeration"
    )
    enum_hitting_n_max: int = Field(
        5, ge=1, description="Largest n_max accepted for hitting enumeration"
    )
    enum_max_deficiency: int = Field(
        3, ge=1, description="Largest deficiency accepted by the enumerator"
    )
    enum_node_budget: int = Field(
        5_000_000,
        ge=1,
        description="Search nodes per enumeration job before the exhaustive flag is cleared",
    )
    workers: int = Field(
        default_factory=_default_workers,
        ge=1,
        description="Worker processes for independent search jobs",
    )


def load_settings(path: Optional[Union[str, Path]] = None) -> ToolkitSettings:
    """
    Build settings from defaults and an optional YAML override file.

    Args:
        path: YAML file; falls back to the MUDEF_CONFIG environment variable

    Returns:
        Validated settings
    """
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return ToolkitSettings()

    with open(path, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}
    if not isinstance(raw, dict):
        raise ValueError(f"Settings file {path} must contain a mapping")
    return ToolkitSettings(**raw)
