# /tests/test_cnf.py

import random

import pytest

from core.cnf import (
    ClauseSet,
    apply_assignment,
    canonical_digest,
    is_hitting,
    load_dimacs,
    make_clause,
    metrics,
    parse_dimacs,
    render_dimacs,
)
from core.enumeration import random_clause_set, random_hitting_clause_set
from core.errors import DimacsParseError, TautologyError
from tests.helpers import brute_force_models, clause_set


class TestClauseSet:
    def test_set_semantics(self):
        cs = clause_set([1, 2], [2, 1], [-3])
        assert cs.c == 2
        assert cs.n == 3
        assert cs.deficiency == -1

    def test_rejects_tautology_and_zero(self):
        with pytest.raises(ValueError):
            make_clause([1, -1])
        with pytest.raises(ValueError):
            ClauseSet([[0, 1]])

    def test_degrees_and_sorted_order(self):
        cs = clause_set([-1], [1, 2], [-2, 1])
        assert cs.degrees() == {1: (2, 1), 2: (1, 1)}
        assert cs.to_lists() == [[1, 2], [1, -2], [-1]]

    def test_equality_ignores_construction_order(self, a2):
        assert a2 == clause_set([-1, -2], [-1, 2], [1, -2], [1, 2])
        assert hash(a2) == hash(clause_set([-1, -2], [-1, 2], [1, -2], [1, 2]))


class TestDimacs:
    def test_smallest_mu(self, smallest_mu):
        assert parse_dimacs("p cnf 1 2\n1 0\n-1 0\n") == smallest_mu

    def test_duplicates_collapse_with_warning(self):
        doc = load_dimacs("p cnf 2 2\n1 2 0\n1 2 0\n")
        assert doc.clause_set == clause_set([1, 2])
        assert doc.duplicates == 1
        assert any("duplicate" in w for w in doc.warnings)

    def test_tautology_names_clause_index(self):
        with pytest.raises(TautologyError) as info:
            parse_dimacs("p cnf 2 2\n1 0\n1 -1 0\n")
        assert info.value.clause_index == 2

    def test_strip_tautologies(self):
        doc = load_dimacs("p cnf 2 2\n1 -1 0\n2 0\n", strip_tautologies=True)
        assert doc.clause_set == clause_set([2])
        assert doc.stripped_tautologies == 1

    def test_malformed_token_reports_line(self):
        with pytest.raises(DimacsParseError, match="line 3"):
            parse_dimacs("c comment\np cnf 1 1\n1 x 0\n")

    def test_clauses_may_span_lines_and_percent_ends_input(self):
        cs = parse_dimacs("p cnf 2 2\n1\n2 0 -1\n0\n%\n0\n")
        assert cs == clause_set([1, 2], [-1])

    def test_header_mismatch_is_a_warning(self):
        doc = load_dimacs("p cnf 5 3\n1 0\n-1 0\n")
        assert doc.clause_set.c == 2
        assert any("declares 3 clauses" in w for w in doc.warnings)

    def test_unterminated_last_clause(self):
        doc = load_dimacs("p cnf 2 2\n1 0\n-1 2")
        assert doc.clause_set == clause_set([1], [-1, 2])
        assert any("terminator" in w for w in doc.warnings)

    def test_render(self, smallest_mu):
        assert render_dimacs(smallest_mu) == "p cnf 1 2\n1 0\n-1 0\n"
        assert render_dimacs(ClauseSet()) == "p cnf 0 0\n"
        assert render_dimacs(clause_set([])) == "p cnf 0 1\n0\n"

    def test_parse_render_is_identity(self):
        rng = random.Random(7)
        for _ in range(100):
            cs = random_clause_set(rng, rng.randint(1, 6), rng.randint(0, 8))
            assert parse_dimacs(render_dimacs(cs)) == cs

    def test_digest_ignores_input_order(self):
        first = parse_dimacs("p cnf 2 2\n-1 2 0\n1 0\n")
        second = parse_dimacs("p cnf 2 2\n1 0\n2 -1 0\n")
        assert canonical_digest(first) == canonical_digest(second)


class TestMetrics:
    def test_smallest_mu(self, smallest_mu):
        m = metrics(smallest_mu)
        assert (m.n, m.c, m.deficiency, m.min_var_degree, m.full_clause_count) == (1, 2, 1, 2, 2)

    def test_a2(self, a2):
        m = metrics(a2)
        assert (m.n, m.c, m.deficiency, m.min_var_degree, m.full_clause_count) == (2, 4, 2, 4, 4)
        assert [(d.variable, d.positive, d.negative) for d in m.degrees] == [(1, 2, 2), (2, 2, 2)]

    def test_empty(self):
        m = metrics(ClauseSet())
        assert (m.n, m.c, m.deficiency, m.full_clause_count) == (0, 0, 0, 0)
        assert m.min_var_degree is None


class TestSemantics:
    def test_apply_assignment(self, a2, smallest_mu):
        assert apply_assignment(clause_set([1, 2], [-1]), {1: True}) == clause_set([])
        assert apply_assignment(smallest_mu, {}) == smallest_mu
        assert apply_assignment(a2, {1: True}) == clause_set([2], [-2])

    def test_apply_total_model_empties_the_set(self):
        rng = random.Random(3)
        for _ in range(200):
            cs = random_clause_set(rng, rng.randint(1, 5), rng.randint(1, 7))
            for model in brute_force_models(cs):
                assert apply_assignment(cs, model) == ClauseSet()

    def test_is_hitting(self, a2):
        assert is_hitting(a2)
        assert not is_hitting(clause_set([1], [2]))
        assert is_hitting(clause_set([1], [-1, 2], [-1, -2]))

    def test_is_hitting_is_monotone_under_clause_removal(self):
        rng = random.Random(19)
        for _ in range(50):
            cs = random_hitting_clause_set(rng, 5, rng.randint(1, 10))
            assert is_hitting(cs)
            clauses = cs.sorted_clauses()
            for _ in range(10):
                kept = [c for c in clauses if rng.random() < 0.6]
                assert is_hitting(ClauseSet.from_clauses(kept))

    def test_hitting_needs_every_pair_to_clash(self):
        rng = random.Random(23)
        for _ in range(100):
            cs = random_clause_set(rng, 4, rng.randint(2, 6))
            clauses = cs.sorted_clauses()
            pairwise = all(
                any(-lit in second for lit in first)
                for i, first in enumerate(clauses)
                for second in clauses[i + 1:]
            )
            assert is_hitting(cs) == pairwise
