# /src/core/enumeration/universe.py

"""Clause universe over variables {1..n} with precomputed symmetry tables."""

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Dict, List, Sequence, Tuple

from ..cnf.clause_set import Clause, literal_key


def universe_key(clause: Clause) -> Tuple:
    """Length first, then literals: shorter clauses precede longer ones."""
    return (len(clause), tuple(sorted(literal_key(lit) for lit in clause)))


class ClauseUniverse:
    """
    Every non-empty non-tautological clause over {1..n}, indexed in
    `universe_key` order, plus one index permutation per signed renaming.

    A clause-set is a sorted tuple of indices; its minimal image is the least
    sorted image tuple over all permutations.
    """

    def __init__(self, n: int):
        self.n = n
        clauses = []
        for size in range(1, n + 1):
            for chosen in combinations(range(1, n + 1), size):
                for signs in product((1, -1), repeat=size):
                    clauses.append(frozenset(v * s for v, s in zip(chosen, signs)))
        clauses.sort(key=universe_key)
        self.clauses: List[Clause] = clauses
        self.index: Dict[Clause, int] = {c: i for i, c in enumerate(clauses)}
        self.size = len(clauses)
        # Weights in units of 2^-n: a clause of length l falsifies 2^(n-l) assignments.
        self.weights: List[int] = [1 << (n - len(c)) for c in clauses]
        self.target_weight = 1 << n
        self.literal_bits: List[int] = [self._literal_bits(c) for c in clauses]
        self.all_literals = (1 << (2 * n)) - 1
        self.clash_masks: List[int] = [
            self._mask_of(lambda other, c=c: any(-lit in other for lit in c))
            for c in clauses
        ]
        # Strict supersets; MU clause-sets are subsumption-free.
        self.superset_masks: List[int] = [
            self._mask_of(lambda other, c=c: c < other) for c in clauses
        ]
        self.permutations: List[Tuple[int, ...]] = self._build_permutations()
        # mappers[j] lists (k, renamings sending clause j to clause k), ascending in k
        self.mappers: List[List[Tuple[int, List[int]]]] = self._build_mappers()

    def _literal_bits(self, clause: Clause) -> int:
        bits = 0
        for lit in clause:
            bits |= 1 << (2 * (abs(lit) - 1) + (lit < 0))
        return bits

    def _mask_of(self, predicate) -> int:
        mask = 0
        for j, other in enumerate(self.clauses):
            if predicate(other):
                mask |= 1 << j
        return mask

    def _build_permutations(self) -> List[Tuple[int, ...]]:
        tables = []
        variables = range(1, self.n + 1)
        for perm in permutations(variables):
            for flips in product((1, -1), repeat=self.n):
                def image(lit: int) -> int:
                    var = abs(lit)
                    sign = 1 if lit > 0 else -1
                    return perm[var - 1] * sign * flips[var - 1]

                tables.append(
                    tuple(self.index[frozenset(image(l) for l in c)] for c in self.clauses)
                )
        return tables

    def _build_mappers(self) -> List[List[Tuple[int, List[int]]]]:
        targets: List[Dict[int, List[int]]] = [{} for _ in range(self.size)]
        for p, table in enumerate(self.permutations):
            for j, k in enumerate(table):
                targets[j].setdefault(k, []).append(p)
        return [sorted(t.items()) for t in targets]

    def is_min_image(self, indices: Sequence[int]) -> bool:
        """
        True iff no signed renaming maps the sorted tuple to a smaller one.

        A smaller image must send some member to an index not above the
        current first one, so only those renamings are tried.
        """
        current = list(indices)
        first = current[0]
        candidates = set()
        for j in current:
            for k, renamings in self.mappers[j]:
                if k > first:
                    break
                candidates.update(renamings)
        for p in candidates:
            table = self.permutations[p]
            images = sorted(table[i] for i in current)
            if images < current:
                return False
        return True

    def decode(self, indices: Sequence[int]) -> List[Clause]:
        return [self.clauses[i] for i in indices]


@lru_cache(maxsize=None)
def universe_for(n: int) -> ClauseUniverse:
    return ClauseUniverse(n)
