# /src/schemas/common.py

from enum import Enum
from typing import List, TypeAlias

TOOLKIT_VERSION = "0.3.0"

# DIMACS-style clause lists: [[1, -2], [2]]
ClauseList: TypeAlias = List[List[int]]


class ReductionStrategy(str, Enum):
    """Choice rule for the next singular variable in sDP-reduction."""

    FIRST_ID = "first-id"  # Smallest singular variable
    LAST_ID = "last-id"  # Largest singular variable
    GIVEN_ORDER = "given-order"  # First singular variable of a supplied order


class AutarkyMode(str, Enum):
    FIND = "find"  # Search one non-trivial autarky
    KERNEL = "kernel"  # Reduce to the lean kernel
    SURPLUS = "surplus"  # Minimise |F_V| - |V|


class CheckStatus(str, Enum):
    PASS = "pass"  # Value matches the published constant
    PARTIAL = "partial"  # Bounds too small to exhibit the witness
    FAIL = "fail"  # A found instance exceeds the published constant
    SKIPPED = "skipped"  # Sub-check refused or had nothing to inspect

