# /tests/test_reduction.py

import random

import pytest

from core.analysis import MUAnalyzer
from core.cnf import ClauseSet, render_body
from core.enumeration import random_clause_set, random_singular_extensions
from core.errors import CapExceededError, PreconditionError
from core.oracle import SatOracle
from core.reduction import (
    IsomorphismChecker,
    Reducer,
    apply_renaming,
    dp_reduce,
    invert_renaming,
    singular_variables,
)
from schemas.common import ReductionStrategy
from schemas.reduction import SignedRenaming
from tests.helpers import brute_force_sat, clause_set

CHAIN = [[1], [-1, 2], [-2]]


def random_renaming(rng, variables):
    variables = sorted(variables)
    targets = list(range(1, len(variables) + 1))
    rng.shuffle(targets)
    flips = [v for v in variables if rng.random() < 0.5]
    return SignedRenaming(mapping=dict(zip(variables, targets)), flips=flips)


class TestSingularVariables:
    def test_chain(self):
        assert singular_variables(clause_set(*CHAIN)) == {1, 2}

    def test_a2_is_nonsingular(self, a2):
        assert singular_variables(a2) == set()

    def test_pure_single_occurrence_counts(self):
        assert singular_variables(clause_set([1])) == {1}


class TestDpReduce:
    def test_examples(self):
        chain = clause_set(*CHAIN)
        assert dp_reduce(chain, 2) == clause_set([1], [-1])
        assert dp_reduce(chain, 1) == clause_set([2], [-2])
        assert dp_reduce(clause_set([1, 2], [-1, -2], [3]), 1) == clause_set([3])

    def test_variable_must_occur(self, a2):
        with pytest.raises(PreconditionError):
            dp_reduce(a2, 3)

    def test_equisatisfiable_and_eliminating(self):
        rng = random.Random(13)
        for _ in range(300):
            cs = random_clause_set(rng, rng.randint(1, 6), rng.randint(1, 9))
            var = rng.choice(sorted(cs.variables))
            reduced = dp_reduce(cs, var)
            assert var not in reduced.variables
            assert brute_force_sat(reduced) == brute_force_sat(cs)


class TestNormalForms:
    def test_chain_reduces_to_the_empty_clause(self):
        reducer = Reducer()
        form, trace = reducer.sdp_normal_form(clause_set(*CHAIN))
        assert form == clause_set([])
        assert [step.variable for step in trace.steps] == [1, 2]
        assert trace.steps[0].snapshot == render_body(clause_set([2], [-2]))

    def test_last_id_strategy(self):
        form, trace = Reducer().sdp_normal_form(
            clause_set(*CHAIN), ReductionStrategy.LAST_ID
        )
        assert form == clause_set([])
        assert [step.variable for step in trace.steps] == [2, 1]

    def test_given_order(self):
        form, trace = Reducer().sdp_normal_form(
            clause_set([1], [-1, 2], [-2, 3], [-3]), ReductionStrategy.GIVEN_ORDER, [3]
        )
        assert form == clause_set([])
        assert trace.steps[0].variable == 3
        assert trace.strategy == ReductionStrategy.GIVEN_ORDER

    def test_nonsingular_input_is_unchanged(self, a2):
        form, trace = Reducer().sdp_normal_form(a2)
        assert form == a2
        assert trace.steps == []
        assert Reducer().sdp_normal_form(ClauseSet())[0] == ClauseSet()

    def test_all_normal_forms(self, a2):
        reducer = Reducer()
        (chain_class,) = reducer.all_sdp_normal_forms(clause_set(*CHAIN))
        assert chain_class.n == 0 and chain_class.representative == [[]]
        (a2_class,) = reducer.all_sdp_normal_forms(a2)
        assert (a2_class.n, a2_class.c, a2_class.members) == (2, 4, 1)
        (empty_class,) = reducer.all_sdp_normal_forms(clause_set([]))
        assert empty_class.representative == [[]]

    def test_exploration_cap(self):
        wide = ClauseSet([[v] for v in range(1, 14)])
        with pytest.raises(CapExceededError):
            Reducer(normal_form_var_cap=12).normal_forms(wide)

    def test_singular_reduction_preserves_mu_and_deficiency(self, a2):
        rng = random.Random(17)
        analyzer = MUAnalyzer()
        for _ in range(20):
            cs = random_singular_extensions(rng, a2, 5)
            for var in singular_variables(cs):
                reduced = dp_reduce(cs, var)
                assert analyzer.is_minimally_unsatisfiable(reduced).is_mu
                assert reduced.deficiency == cs.deficiency

    def test_confluence_on_extensions(self, a2, smallest_mu):
        rng = random.Random(23)
        reducer = Reducer()
        for source in (smallest_mu, a2):
            for _ in range(15):
                cs = random_singular_extensions(rng, source, 6)
                classes = reducer.all_sdp_normal_forms(cs)
                assert len({cls.n for cls in classes}) == 1
                if cs.deficiency == 2:
                    assert len(classes) == 1


class TestIsomorphism:
    def test_identity(self, a2):
        renaming = IsomorphismChecker().are_isomorphic(a2, a2)
        assert apply_renaming(a2, renaming) == a2

    def test_pure_renaming(self, smallest_mu):
        renaming = IsomorphismChecker().are_isomorphic(smallest_mu, clause_set([2], [-2]))
        assert renaming.mapping == {1: 2}
        assert renaming.flips == []

    def test_different_parameters(self, smallest_mu):
        assert IsomorphismChecker().are_isomorphic(smallest_mu, clause_set([1, 2])) is None

    def test_non_isomorphic_with_equal_counts(self):
        first = clause_set([1, 2], [-1], [-2, 3])
        second = clause_set([1, 2], [-1], [2, 3])
        assert IsomorphismChecker().are_isomorphic(first, second) is None

    def test_random_renamings_are_recovered(self):
        rng = random.Random(29)
        checker = IsomorphismChecker()
        for _ in range(100):
            cs = random_clause_set(rng, rng.randint(1, 6), rng.randint(1, 8))
            image = apply_renaming(cs, random_renaming(rng, cs.variables))
            renaming = checker.are_isomorphic(cs, image)
            assert renaming is not None
            assert apply_renaming(cs, renaming) == image
            assert apply_renaming(image, invert_renaming(renaming)) == cs
            assert checker.canonical_form(cs) == checker.canonical_form(image)

    def test_canonical_form_uses_variables_one_to_n(self):
        form = IsomorphismChecker().canonical_form(clause_set([4, -7], [7], [-4]))
        assert form.variables == {1, 2}

    def test_cap(self):
        with pytest.raises(CapExceededError):
            IsomorphismChecker(var_cap=3).canonical_form(clause_set([1, 2, 3, 4]))

    def test_twelve_unit_clauses(self):
        units = clause_set(*([v] for v in range(1, 13)))
        checker = IsomorphismChecker()
        renaming = checker.are_isomorphic(units, units)
        assert renaming is not None
        assert apply_renaming(units, renaming) == units
        assert checker.canonical_form(units) == units

    def test_disjoint_copies_of_the_smallest_mu(self):
        copies = clause_set(*([s * v] for v in range(1, 7) for s in (1, -1)))
        checker = IsomorphismChecker()
        assert checker.canonical_form(copies) == copies

        rng = random.Random(31)
        image = apply_renaming(copies, random_renaming(rng, copies.variables))
        renaming = checker.are_isomorphic(copies, image)
        assert renaming is not None
        assert apply_renaming(copies, renaming) == image

    def test_symmetric_sets_differing_in_one_clause(self):
        first = clause_set(*([v] for v in range(1, 11)), [-1, -2])
        second = clause_set(*([v] for v in range(1, 11)), [-1, 2])
        checker = IsomorphismChecker()
        assert checker.are_isomorphic(first, second) is None
        assert checker.canonical_form(first) != checker.canonical_form(second)
