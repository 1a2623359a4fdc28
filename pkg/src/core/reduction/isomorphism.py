# /src/core/reduction/isomorphism.py

"""Canonical forms and isomorphism of clause-sets under signed renamings."""

import logging
from typing import Dict, List, NamedTuple, Optional, Set, Tuple

from schemas.reduction import SignedRenaming
from ..cnf.clause_set import Clause, ClauseSet
from ..errors import CapExceededError, check_cap

logger = logging.getLogger(__name__)

# labels[k - 1] = (source variable, flipped) for canonical variable k
Labels = Tuple[Tuple[int, bool], ...]
# source variable -> signed target literal (negative when the sign flips)
LiteralMap = Dict[int, int]


class CanonicalLabelling(NamedTuple):
    form: ClauseSet
    labels: Labels


def isomorphism_invariant(clause_set: ClauseSet) -> Tuple:
    """Cheap invariant: equal for isomorphic clause-sets."""
    degree_pairs = sorted(
        tuple(sorted(pair)) for pair in clause_set.degrees().values()
    )
    lengths = sorted(len(c) for c in clause_set.clauses)
    return (clause_set.n, clause_set.c, tuple(lengths), tuple(degree_pairs))


def _profiles(clause_set: ClauseSet) -> Dict[int, Tuple[Tuple[int, bool], ...]]:
    """Per variable, the sorted (clause length, positive) pairs of its occurrences."""
    found: Dict[int, List[Tuple[int, bool]]] = {}
    for clause in clause_set.clauses:
        for lit in clause:
            found.setdefault(abs(lit), []).append((len(clause), lit > 0))
    return {var: tuple(sorted(pairs)) for var, pairs in found.items()}


class _SearchExhausted(Exception):
    pass


class RenamingSearch:
    """
    Backtracking search for signed renamings carrying `first` onto `second`.

    A variable may only go to a target variable with the same occurrence
    profile (after the sign flip). Every clause touched by a new binding must
    map into a target clause of the same length, exactly once all of its
    variables are bound.
    """

    def __init__(self, first: ClauseSet, second: ClauseSet):
        self.clauses: List[Clause] = first.sorted_clauses()
        self.targets = second.clauses
        self.targets_by_length: Dict[int, List[Clause]] = {}
        for clause in second.sorted_clauses():
            self.targets_by_length.setdefault(len(clause), []).append(clause)
        self.occurrences: Dict[int, List[int]] = {v: [] for v in first.variables}
        for i, clause in enumerate(self.clauses):
            for lit in clause:
                self.occurrences[abs(lit)].append(i)

        source = _profiles(first)
        target = _profiles(second)
        self.candidates: Dict[int, List[Tuple[int, bool]]] = {}
        for var, profile in source.items():
            flipped = tuple(sorted((length, not positive) for length, positive in profile))
            self.candidates[var] = [
                (w, flip)
                for w in sorted(target)
                for flip in (False, True)
                if (flipped if flip else profile) == target[w]
            ]
        self._nodes = 0
        self._budget: Optional[int] = None

    def extend(self, partial: LiteralMap, budget: Optional[int] = None) -> Optional[LiteralMap]:
        """
        Complete a partial literal map to a full renaming.

        Args:
            partial: Bindings fixed up front
            budget: Largest number of tried bindings; None searches exhaustively

        Returns:
            The complete literal map, or None when there is none (or the
            budget ran out)
        """
        image = dict(partial)
        used = {abs(lit) for lit in image.values()}
        if len(used) != len(image):
            return None
        for var, lit in image.items():
            if (abs(lit), lit < 0) not in self.candidates.get(var, ()):
                return None
            if not self._consistent(var, image):
                return None
        order = self._order(set(image))
        self._nodes = 0
        self._budget = budget
        try:
            found = self._search(order, 0, image, used)
        except _SearchExhausted:
            return None
        return image if found else None

    def _order(self, placed: Set[int]) -> List[int]:
        """Bind variables sharing clauses with bound ones first, then the most constrained."""
        order = []
        placed = set(placed)
        remaining = set(self.occurrences) - placed
        while remaining:
            var = min(
                remaining,
                key=lambda v: (-self._links(v, placed), len(self.candidates[v]), v),
            )
            order.append(var)
            placed.add(var)
            remaining.discard(var)
        return order

    def _links(self, var: int, placed: Set[int]) -> int:
        return sum(
            1
            for i in self.occurrences[var]
            if any(abs(lit) in placed for lit in self.clauses[i])
        )

    def _search(self, order: List[int], depth: int, image: LiteralMap, used: Set[int]) -> bool:
        if depth == len(order):
            return True
        var = order[depth]
        for target, flip in self.candidates[var]:
            if target in used:
                continue
            self._nodes += 1
            if self._budget is not None and self._nodes > self._budget:
                raise _SearchExhausted()
            image[var] = -target if flip else target
            used.add(target)
            if self._consistent(var, image) and self._search(order, depth + 1, image, used):
                return True
            del image[var]
            used.discard(target)
        return False

    def _consistent(self, var: int, image: LiteralMap) -> bool:
        for i in self.occurrences[var]:
            clause = self.clauses[i]
            part = frozenset(
                image[abs(lit)] if lit > 0 else -image[abs(lit)]
                for lit in clause
                if abs(lit) in image
            )
            if len(part) == len(clause):
                if part not in self.targets:
                    return False
            elif not any(part <= d for d in self.targets_by_length.get(len(clause), ())):
                return False
        return True


def _renaming(image: LiteralMap) -> SignedRenaming:
    return SignedRenaming(
        mapping={var: abs(image[var]) for var in sorted(image)},
        flips=[var for var in sorted(image) if image[var] < 0],
    )


class IsomorphismChecker:
    """
    Canonical labelling by greedy label-by-label minimisation.

    Canonical variable k is chosen after 1..k-1: every unused (variable, flip)
    pair is tried, each clause is summarised by its length and the literals
    labelled so far, and only partial renamings with the least sorted summary
    survive. Survivors related by an automorphism of the input lead to the
    same completions, so one per orbit is kept. The result depends only on
    the isomorphism class, so two clause-sets are isomorphic iff their
    canonical forms are equal; it is the minimum of this greedy order, not
    the lexicographically least image over all signed renamings.
    """

    def __init__(
        self,
        var_cap: int = 12,
        frontier_cap: int = 200_000,
        automorphism_budget: int = 2_000,
    ):
        """
        Args:
            var_cap: Largest n accepted for canonical forms and isomorphism tests
            frontier_cap: Largest number of surviving partial renamings
            automorphism_budget: Bindings tried per automorphism test while
                pruning survivors; an exhausted test keeps both survivors
        """
        self.var_cap = var_cap
        self.frontier_cap = frontier_cap
        self.automorphism_budget = automorphism_budget

    def canonical_labelling(self, clause_set: ClauseSet) -> CanonicalLabelling:
        check_cap("isomorphism_var_cap", self.var_cap, clause_set.n)
        clauses = clause_set.sorted_clauses()
        variables = sorted(clause_set.variables)
        n = len(variables)
        if n == 0:
            return CanonicalLabelling(clause_set, ())

        lengths = [len(c) for c in clauses]
        occurrences: Dict[int, List[Tuple[int, bool]]] = {v: [] for v in variables}
        for i, clause in enumerate(clauses):
            for lit in clause:
                occurrences[abs(lit)].append((i, lit > 0))
        sentinel = 2 * n + 2
        indices = range(len(clauses))
        automorphisms = RenamingSearch(clause_set, clause_set)

        # known[i] holds the ascending literal codes 2k+neg assigned so far in clause i
        frontier: Dict[Tuple[Tuple[int, ...], ...], Labels] = {
            tuple(() for _ in clauses): ()
        }
        for k in range(1, n + 1):
            best = None
            survivors: Dict[Tuple[Tuple[int, ...], ...], Labels] = {}
            for known, labels in frontier.items():
                used = {v for v, _ in labels}
                for var in variables:
                    if var in used:
                        continue
                    for flipped in (False, True):
                        extended = list(known)
                        for i, positive in occurrences[var]:
                            extended[i] = known[i] + (2 * k + (positive == flipped),)
                        key = tuple(extended)
                        summary = tuple(
                            sorted((lengths[i],) + key[i] + (sentinel,) for i in indices)
                        )
                        candidate = labels + ((var, flipped),)
                        if best is None or summary < best:
                            best = summary
                            survivors = {key: candidate}
                        elif (
                            summary == best
                            and key not in survivors
                            and not self._same_orbit(automorphisms, survivors, candidate)
                        ):
                            survivors[key] = candidate
            if len(survivors) > self.frontier_cap:
                raise CapExceededError(
                    "canonical_frontier_cap", self.frontier_cap, len(survivors)
                )
            frontier = survivors

        logger.debug("canonical labelling of n=%d: %d final labellings", n, len(frontier))
        known, labels = next(iter(frontier.items()))
        form = ClauseSet.from_clauses(
            frozenset(-(code >> 1) if code & 1 else code >> 1 for code in codes)
            for codes in known
        )
        return CanonicalLabelling(form, labels)

    def _same_orbit(
        self,
        automorphisms: RenamingSearch,
        survivors: Dict[Tuple[Tuple[int, ...], ...], Labels],
        candidate: Labels,
    ) -> bool:
        """True when an automorphism carries some survivor's labels onto `candidate`."""
        for kept in survivors.values():
            partial = {
                src: -dst if src_flip != dst_flip else dst
                for (src, src_flip), (dst, dst_flip) in zip(kept, candidate)
            }
            if automorphisms.extend(partial, self.automorphism_budget) is not None:
                return True
        return False

    def canonical_form(self, clause_set: ClauseSet) -> ClauseSet:
        return self.canonical_labelling(clause_set).form

    def are_isomorphic(
        self, first: ClauseSet, second: ClauseSet
    ) -> Optional[SignedRenaming]:
        """
        Find a signed renaming carrying `first` onto `second`.

        Args:
            first: Source clause-set
            second: Target clause-set

        Returns:
            The renaming, or None when the clause-sets are not isomorphic
        """
        check_cap("isomorphism_var_cap", self.var_cap, max(first.n, second.n))
        if isomorphism_invariant(first) != isomorphism_invariant(second):
            return None
        image = RenamingSearch(first, second).extend({})
        if image is None:
            return None
        return _renaming(image)


def apply_renaming(clause_set: ClauseSet, renaming: SignedRenaming) -> ClauseSet:
    flips = set(renaming.flips)

    def image(lit: int) -> int:
        var = abs(lit)
        target = renaming.mapping[var]
        positive = (lit > 0) != (var in flips)
        return target if positive else -target

    return ClauseSet.from_clauses(
        frozenset(image(lit) for lit in clause) for clause in clause_set.clauses
    )


def invert_renaming(renaming: SignedRenaming) -> SignedRenaming:
    inverse = {dst: src for src, dst in renaming.mapping.items()}
    flips = sorted(renaming.mapping[var] for var in renaming.flips)
    return SignedRenaming(mapping=dict(sorted(inverse.items())), flips=flips)
