# /src/core/cnf/clause_set.py

"""Immutable clause-set model with set semantics."""

from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

# Literals are non-zero ints: v or -v for variable v >= 1.
Clause = FrozenSet[int]
Assignment = Mapping[int, bool]


def literal_key(literal: int) -> Tuple[int, bool]:
    """Order literals by variable, positive before negative."""
    return (abs(literal), literal < 0)


def clause_key(clause: Iterable[int]) -> Tuple[Tuple[int, bool], ...]:
    return tuple(sorted(literal_key(lit) for lit in clause))


def sorted_literals(clause: Iterable[int]) -> List[int]:
    return sorted(clause, key=literal_key)


def is_tautological(literals: Iterable[int]) -> bool:
    seen = set(literals)
    return any(-lit in seen for lit in seen)


def make_clause(literals: Iterable[int]) -> Clause:
    """
    Build a clause, rejecting zero literals and complementary pairs.

    Args:
        literals: Signed variable ids

    Returns:
        The clause as a frozenset of literals
    """
    clause = frozenset(int(lit) for lit in literals)
    if 0 in clause:
        raise ValueError("literal 0 is not a literal")
    if is_tautological(clause):
        raise ValueError(f"tautological clause {sorted_literals(clause)}")
    return clause


def assignment_literals(assignment: Assignment) -> List[int]:
    """Render an assignment as the sorted list of literals it makes true."""
    return sorted(
        (var if value else -var for var, value in assignment.items()), key=literal_key
    )


class ClauseSet:
    """
    A finite set of pairwise distinct non-tautological clauses.

    Values are immutable and hashable; equality is set equality of clauses.
    """

    __slots__ = ("_clauses", "_variables", "_hash")

    def __init__(self, clauses: Iterable[Iterable[int]] = ()):
        self._clauses: FrozenSet[Clause] = frozenset(make_clause(c) for c in clauses)
        self._variables: Optional[FrozenSet[int]] = None
        self._hash: Optional[int] = None

    @classmethod
    def from_clauses(cls, clauses: Iterable[Clause]) -> "ClauseSet":
        """Wrap already-validated frozenset clauses without re-checking them."""
        obj = cls.__new__(cls)
        obj._clauses = frozenset(clauses)
        obj._variables = None
        obj._hash = None
        return obj

    def __reduce__(self):
        return (ClauseSet.from_clauses, (self._clauses,))

    @property
    def clauses(self) -> FrozenSet[Clause]:
        return self._clauses

    @property
    def variables(self) -> FrozenSet[int]:
        if self._variables is None:
            self._variables = frozenset(abs(lit) for c in self._clauses for lit in c)
        return self._variables

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def c(self) -> int:
        return len(self._clauses)

    @property
    def deficiency(self) -> int:
        return self.c - self.n

    @property
    def max_variable(self) -> int:
        return max(self.variables, default=0)

    def sorted_clauses(self) -> List[Clause]:
        """Clauses in canonical order: literals sorted, clauses lexicographic."""
        return sorted(self._clauses, key=clause_key)

    def to_lists(self) -> List[List[int]]:
        return [sorted_literals(c) for c in self.sorted_clauses()]

    def degrees(self) -> Dict[int, Tuple[int, int]]:
        """Map each occurring variable to (positive, negative) occurrence counts."""
        counts: Dict[int, List[int]] = {}
        for clause in self._clauses:
            for lit in clause:
                entry = counts.setdefault(abs(lit), [0, 0])
                entry[0 if lit > 0 else 1] += 1
        return {var: (pos, neg) for var, (pos, neg) in sorted(counts.items())}

    def without(self, clause: Clause) -> "ClauseSet":
        return ClauseSet.from_clauses(self._clauses - {clause})

    def without_all(self, clauses: Iterable[Clause]) -> "ClauseSet":
        return ClauseSet.from_clauses(self._clauses - frozenset(clauses))

    def __len__(self) -> int:
        return len(self._clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.sorted_clauses())

    def __contains__(self, clause: object) -> bool:
        return clause in self._clauses

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClauseSet):
            return NotImplemented
        return self._clauses == other._clauses

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._clauses)
        return self._hash

    def __repr__(self) -> str:
        return f"ClauseSet({self.to_lists()})"
