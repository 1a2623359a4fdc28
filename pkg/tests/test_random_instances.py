# /tests/test_random_instances.py

import random

import pytest

from core.analysis import MUAnalyzer
from core.cnf import ClauseSet, is_hitting
from core.enumeration import (
    random_clause_set,
    random_hitting_clause_set,
    random_singular_extensions,
    singular_extension,
)
from core.errors import PreconditionError
from core.reduction import Reducer, dp_reduce, singular_variables
from tests.helpers import brute_force_sat, clause_set


def test_random_clause_set_is_valid():
    rng = random.Random(1)
    for _ in range(100):
        cs = random_clause_set(rng, 5, 8, min_len=2, max_len=3)
        assert cs.c <= 8
        assert all(2 <= len(clause) <= 3 for clause in cs)
        assert cs.variables <= set(range(1, 6))
        # round-trip through the validating constructor
        assert ClauseSet(cs.to_lists()) == cs


def test_random_hitting_clause_sets():
    rng = random.Random(2)
    for _ in range(50):
        cs = random_hitting_clause_set(rng, 4, rng.randint(0, 10))
        assert is_hitting(cs)
        assert not brute_force_sat(cs)
        dropped = random_hitting_clause_set(rng, 4, rng.randint(1, 10), drop=1)
        assert is_hitting(dropped)
        assert brute_force_sat(dropped)


def test_singular_extension_keeps_mu_and_deficiency(a2):
    rng = random.Random(3)
    analyzer = MUAnalyzer()
    for _ in range(30):
        extended = singular_extension(rng, a2)
        assert extended.n == 3
        assert extended.deficiency == 2
        assert 3 in singular_variables(extended)
        assert dp_reduce(extended, 3) == a2
        assert analyzer.is_minimally_unsatisfiable(extended).is_mu


def test_singular_extensions_reduce_back():
    rng = random.Random(4)
    reducer = Reducer()
    chain = clause_set([1], [-1, 2], [-2])
    for _ in range(20):
        extended = random_singular_extensions(rng, chain, max_n=6)
        assert 3 <= extended.n <= 6
        forms = reducer.all_sdp_normal_forms(extended)
        assert [(form.n, form.c) for form in forms] == [(0, 1)]


def test_singular_extension_needs_a_clause():
    with pytest.raises(PreconditionError):
        singular_extension(random.Random(0), ClauseSet())
