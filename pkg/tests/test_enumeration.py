# /tests/test_enumeration.py

import json

import pytest

from core.analysis import MUAnalyzer
from core.cnf import render_body
from core.enumeration import (
    CatalogEnumerator,
    ClauseUniverse,
    dump_catalog,
    entry_clause_set,
    load_catalog,
    read_catalog,
    write_catalog,
)
from core.errors import CapExceededError, CatalogFormatError
from core.reduction import IsomorphismChecker
from schemas.enumeration import EnumSpec
from tests.helpers import clause_set


@pytest.fixture
def enumerator():
    return CatalogEnumerator(workers=1)


def counts(catalog):
    return {cell.n: cell.count for cell in catalog.header.cells}


class TestClauseUniverse:
    def test_sizes(self):
        # 3^n - 1 non-empty clauses
        assert ClauseUniverse(1).size == 2
        assert ClauseUniverse(2).size == 8
        assert ClauseUniverse(3).size == 26
        assert len(ClauseUniverse(2).permutations) == 8
        assert len(ClauseUniverse(3).permutations) == 48

    def test_order_and_weights(self):
        u = ClauseUniverse(2)
        assert u.clauses[:4] == [
            frozenset({1}), frozenset({-1}), frozenset({2}), frozenset({-2})
        ]
        assert u.weights[0] == 2 and u.weights[-1] == 1
        assert u.target_weight == 4

    def test_min_image(self):
        u = ClauseUniverse(2)
        first = u.index[frozenset({1})]
        second = u.index[frozenset({-1})]
        flipped = u.index[frozenset({-2})]
        assert u.is_min_image([first, second])
        # {¬2} maps onto {1} under a renaming
        assert not u.is_min_image([flipped])

    def test_every_table_is_a_permutation(self):
        u = ClauseUniverse(3)
        for table in u.permutations:
            assert sorted(table) == list(range(u.size))


class TestEnumerate:
    def test_deficiency_one_single_variable(self, enumerator):
        catalog = enumerator.enumerate(EnumSpec(n_max=1, deficiency=1))
        assert len(catalog.entries) == 1
        assert entry_clause_set(catalog.entries[0]) == clause_set([1], [-1])
        assert catalog.exhaustive

    def test_deficiency_two_needs_two_variables(self, enumerator):
        catalog = enumerator.enumerate(EnumSpec(n_max=1, deficiency=2))
        assert catalog.entries == []
        assert counts(catalog) == {1: 0}

    def test_deficiency_two_hitting(self, enumerator, a2):
        spec = EnumSpec(n_max=2, deficiency=2, require_hitting=True)
        catalog = enumerator.enumerate(spec)
        assert len(catalog.entries) == 1
        iso = IsomorphismChecker()
        assert iso.are_isomorphic(entry_clause_set(catalog.entries[0]), a2) is not None
        entry = catalog.entries[0]
        assert entry.min_var_degree == 4
        assert entry.full_clause_count == 4
        assert entry.flags.hitting and entry.flags.nonsingular

    def test_deficiency_one_classes(self, enumerator):
        # n=2: the hitting "comb" {1},{¬1,2},{¬1,¬2} and the chain {1},{¬1,2},{¬2}
        assert counts(enumerator.enumerate(EnumSpec(n_max=2, deficiency=1))) == {1: 1, 2: 2}
        hitting = EnumSpec(n_max=2, deficiency=1, require_hitting=True)
        assert counts(enumerator.enumerate(hitting)) == {1: 1, 2: 1}

    def test_nonsingular_deficiency_one_is_empty(self, enumerator):
        spec = EnumSpec(n_max=3, deficiency=1, require_nonsingular=True)
        assert enumerator.enumerate(spec).entries == []

    def test_entries_are_mu_and_pairwise_non_isomorphic(self, enumerator):
        analyzer = MUAnalyzer()
        iso = IsomorphismChecker()
        catalog = enumerator.enumerate(EnumSpec(n_max=3, deficiency=2))
        assert catalog.entries
        forms = set()
        for entry in catalog.entries:
            cs = entry_clause_set(entry)
            assert analyzer.is_minimally_unsatisfiable(cs).is_mu
            assert cs.deficiency == 2 and entry.n == cs.n
            forms.add(iso.canonical_form(cs))
        assert len(forms) == len(catalog.entries)

    def test_entry_order(self, enumerator):
        catalog = enumerator.enumerate(EnumSpec(n_max=3, deficiency=2))
        keys = [(e.n, render_body(entry_clause_set(e))) for e in catalog.entries]
        assert keys == sorted(keys)

    def test_deterministic(self, enumerator):
        spec = EnumSpec(n_max=3, deficiency=1)
        first = dump_catalog(enumerator.enumerate(spec))
        second = dump_catalog(CatalogEnumerator(workers=1).enumerate(spec))
        assert first == second

    def test_workers_do_not_change_the_catalog(self):
        spec = EnumSpec(n_max=3, deficiency=2, require_hitting=True)
        serial = CatalogEnumerator(workers=1).enumerate(spec)
        parallel = CatalogEnumerator(workers=2).enumerate(spec)
        assert serial.entries == parallel.entries

    def test_caps(self, enumerator):
        with pytest.raises(CapExceededError) as info:
            enumerator.enumerate(EnumSpec(n_max=5, deficiency=1))
        assert info.value.cap_name == "enum_general_n_max"
        with pytest.raises(CapExceededError) as info:
            enumerator.enumerate(EnumSpec(n_max=6, deficiency=1, require_hitting=True))
        assert info.value.cap_name == "enum_hitting_n_max"
        with pytest.raises(CapExceededError) as info:
            enumerator.enumerate(EnumSpec(n_max=2, deficiency=4))
        assert info.value.cap_name == "enum_max_deficiency"

    def test_node_budget_clears_exhaustive_flag(self):
        catalog = CatalogEnumerator(node_budget=1).enumerate(
            EnumSpec(n_max=3, deficiency=1)
        )
        assert not catalog.exhaustive
        assert any(not cell.exhaustive for cell in catalog.header.cells)


class TestCatalogIO:
    def test_dump_and_load(self, enumerator, tmp_path):
        catalog = enumerator.enumerate(EnumSpec(n_max=2, deficiency=1))
        text = dump_catalog(catalog)
        lines = text.splitlines()
        assert json.loads(lines[0])["kind"] == "header"
        assert len(lines) == 1 + len(catalog.entries)
        assert load_catalog(text) == catalog

        path = tmp_path / "nested" / "d1.jsonl"
        write_catalog(catalog, path)
        assert read_catalog(path) == catalog

    def test_blank_lines_are_ignored(self, enumerator):
        catalog = enumerator.enumerate(EnumSpec(n_max=1, deficiency=1))
        assert load_catalog("\n" + dump_catalog(catalog) + "\n\n") == catalog

    @pytest.mark.parametrize(
        "mutate, message",
        [
            (lambda lines: lines[1:], "entry before header"),
            (lambda lines: lines[:1] + lines, "second header"),
            (lambda lines: lines + ["{not json"], "invalid JSON"),
            (lambda lines: lines + ['{"kind": "other"}'], "unknown record kind"),
            (lambda lines: [], "missing header"),
        ],
    )
    def test_format_errors(self, enumerator, mutate, message):
        lines = dump_catalog(
            enumerator.enumerate(EnumSpec(n_max=1, deficiency=1))
        ).splitlines()
        with pytest.raises(CatalogFormatError, match=message):
            load_catalog("\n".join(mutate(lines)))

    def test_invalid_clauses_are_rejected(self, enumerator):
        catalog = enumerator.enumerate(EnumSpec(n_max=1, deficiency=1))
        entry = catalog.entries[0].model_copy(update={"clauses": [[1, -1]]})
        text = catalog.header.model_dump_json() + "\n" + entry.model_dump_json()
        with pytest.raises(CatalogFormatError, match="catalog line 2"):
            load_catalog(text)
