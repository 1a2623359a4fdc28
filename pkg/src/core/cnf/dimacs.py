# /src/core/cnf/dimacs.py

"""DIMACS CNF ingestion and byte-stable rendering."""

import hashlib
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Set, Union

from .clause_set import Clause, ClauseSet, is_tautological, sorted_literals
from ..errors import DimacsParseError, TautologyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DimacsDocument:
    """Parsed DIMACS input together with its diagnostics."""

    clause_set: ClauseSet
    header_vars: Optional[int] = None
    header_clauses: Optional[int] = None
    duplicates: int = 0
    stripped_tautologies: int = 0
    warnings: List[str] = field(default_factory=list)


class DimacsReader:
    """
    Token-stream DIMACS reader.

    Clauses may span lines; `0` terminates a clause, and a terminator on its
    own is the empty clause. Header counts are advisory.
    """

    def __init__(self, strip_tautologies: bool = False):
        """
        Args:
            strip_tautologies: Drop tautological clauses instead of rejecting them
        """
        self.strip_tautologies = strip_tautologies

    def read(self, text: str) -> DimacsDocument:
        header_vars: Optional[int] = None
        header_clauses: Optional[int] = None
        clauses: List[Clause] = []
        seen: Set[Clause] = set()
        duplicates = 0
        stripped = 0
        total = 0
        current: List[int] = []
        current_line = 0
        warnings: List[str] = []

        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            if line.startswith("%"):
                break
            if line.startswith("p"):
                if header_vars is not None:
                    raise DimacsParseError("duplicate problem line", lineno)
                if current or clauses:
                    raise DimacsParseError("problem line after clauses", lineno)
                header_vars, header_clauses = self._parse_header(line, lineno)
                continue

            for token in line.split():
                try:
                    lit = int(token)
                except ValueError:
                    raise DimacsParseError(f"malformed token {token!r}", lineno) from None
                if lit != 0:
                    if not current:
                        current_line = lineno
                    current.append(lit)
                    continue

                total += 1
                clause = frozenset(current)
                current = []
                if is_tautological(clause):
                    if not self.strip_tautologies:
                        raise TautologyError(total, current_line or lineno)
                    stripped += 1
                    continue
                if clause in seen:
                    duplicates += 1
                    continue
                seen.add(clause)
                clauses.append(clause)

        if current:
            # Unterminated final clause
            total += 1
            warnings.append("last clause lacks the 0 terminator")
            clause = frozenset(current)
            if is_tautological(clause):
                if not self.strip_tautologies:
                    raise TautologyError(total, current_line)
                stripped += 1
            elif clause in seen:
                duplicates += 1
            else:
                clauses.append(clause)

        clause_set = ClauseSet.from_clauses(clauses)

        if header_vars is None:
            warnings.append("missing problem line")
        else:
            if header_clauses != total:
                warnings.append(
                    f"header declares {header_clauses} clauses, found {total}"
                )
            if clause_set.max_variable > header_vars:
                warnings.append(
                    f"header declares {header_vars} variables, found id {clause_set.max_variable}"
                )
        if duplicates:
            warnings.append(f"collapsed {duplicates} duplicate clause(s)")
        if stripped:
            warnings.append(f"stripped {stripped} tautological clause(s)")
        for message in warnings:
            logger.warning(message)

        return DimacsDocument(
            clause_set=clause_set,
            header_vars=header_vars,
            header_clauses=header_clauses,
            duplicates=duplicates,
            stripped_tautologies=stripped,
            warnings=warnings,
        )

    def _parse_header(self, line: str, lineno: int):
        tokens = line.split()
        if len(tokens) != 4 or tokens[1] != "cnf":
            raise DimacsParseError(f"malformed problem line {line!r}", lineno)
        try:
            n_vars, n_clauses = int(tokens[2]), int(tokens[3])
        except ValueError:
            raise DimacsParseError(f"malformed problem line {line!r}", lineno) from None
        if n_vars < 0 or n_clauses < 0:
            raise DimacsParseError("negative counts in problem line", lineno)
        return n_vars, n_clauses


def load_dimacs(text: str, strip_tautologies: bool = False) -> DimacsDocument:
    return DimacsReader(strip_tautologies=strip_tautologies).read(text)


def parse_dimacs(text: str, strip_tautologies: bool = False) -> ClauseSet:
    """
    Parse DIMACS text into a clause-set, collapsing duplicate clauses.

    Args:
        text: DIMACS CNF content
        strip_tautologies: Drop tautological clauses instead of raising

    Returns:
        The clause-set
    """
    return load_dimacs(text, strip_tautologies).clause_set


def read_dimacs_file(
    path: Union[str, Path], strip_tautologies: bool = False
) -> DimacsDocument:
    with open(path, "r", encoding="utf-8") as f:
        return load_dimacs(f.read(), strip_tautologies)


def render_body(clause_set: ClauseSet) -> str:
    """Clause lines in canonical order, without the problem line."""
    lines = []
    for clause in clause_set.sorted_clauses():
        lits = sorted_literals(clause)
        lines.append(" ".join(str(lit) for lit in lits + [0]))
    return "".join(line + "\n" for line in lines)


def render_dimacs(clause_set: ClauseSet) -> str:
    """
    Render a clause-set as byte-stable DIMACS.

    The header carries the largest variable id and the clause count.
    """
    header = f"p cnf {clause_set.max_variable} {clause_set.c}\n"
    return header + render_body(clause_set)


def canonical_digest(clause_set: ClauseSet) -> str:
    return hashlib.sha256(render_dimacs(clause_set).encode("utf-8")).hexdigest()
