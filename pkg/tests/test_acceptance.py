# /tests/test_acceptance.py

"""Catalog-scale sweeps; run with `pytest -m slow`."""

import random

import pytest

from core.analysis import MUAnalyzer
from core.autarky import AutarkyFinder
from core.cnf import ClauseSet, apply_assignment
from core.enumeration import (
    CatalogEnumerator,
    ConstantsChecker,
    ExtremalStatistics,
    entry_clause_set,
    random_clause_set,
    random_hitting_clause_set,
    random_singular_extensions,
)
from core.oracle import SatOracle
from core.reduction import IsomorphismChecker, Reducer, dp_reduce
from schemas.common import CheckStatus
from schemas.enumeration import EnumSpec
from tests.helpers import brute_force_models, brute_force_sat

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def enumerator():
    return CatalogEnumerator(workers=2)


@pytest.fixture(scope="module")
def catalogs(enumerator):
    bounds = {1: 4, 2: 3, 3: 3}
    return {
        k: enumerator.enumerate(EnumSpec(n_max=n_max, deficiency=k))
        for k, n_max in bounds.items()
    }


def test_tarsi_over_catalogs_and_random_mu(catalogs):
    for catalog in catalogs.values():
        assert catalog.exhaustive
        assert all(entry.deficiency >= 1 for entry in catalog.entries)

    rng = random.Random(101)
    analyzer = MUAnalyzer()
    mu_found = 0
    drawn = 0
    while mu_found < 1000 and drawn < 20000:
        drawn += 1
        n = rng.randint(1, 4)
        cs = random_clause_set(rng, n, rng.randint(2, 2 * n + 3))
        if analyzer.is_minimally_unsatisfiable(cs).is_mu:
            mu_found += 1
            assert cs.deficiency >= 1
    assert mu_found >= 1000


def test_min_degree_and_full_clause_constants(catalogs, a2):
    extremal = ExtremalStatistics()
    assert extremal.max_min_var_degree(catalogs[1]).value == 2
    assert extremal.max_full_clauses(catalogs[1]).value == 2

    found = extremal.max_min_var_degree(catalogs[2])
    assert found.value == 4
    assert IsomorphismChecker().are_isomorphic(ClauseSet(found.witness), a2) is not None
    assert extremal.max_full_clauses(catalogs[2]).value == 4

    assert extremal.max_min_var_degree(catalogs[3]).value <= 5
    assert extremal.max_full_clauses(catalogs[3]).value <= 4
    assert extremal.sign_degree_violations(catalogs[3]) == []


def test_nonsingular_uhit_deficiency_two(enumerator):
    spec = EnumSpec(n_max=4, deficiency=2, require_hitting=True, require_nonsingular=True)
    catalog = enumerator.enumerate(spec)
    cells = {cell.n: cell for cell in catalog.header.cells}
    assert cells[4].count == 0 and cells[4].exhaustive
    assert max(entry.n for entry in catalog.entries) == 3


def test_confluence_of_singular_extensions(catalogs):
    rng = random.Random(7)
    reducer = Reducer()
    sources = [
        entry_clause_set(entry)
        for catalog in catalogs.values()
        for entry in catalog.entries
        if entry.n < 8
    ]
    for _ in range(500):
        instance = random_singular_extensions(rng, rng.choice(sources), 8)
        classes = reducer.all_sdp_normal_forms(instance)
        assert len({cls.n for cls in classes}) == 1
        if instance.deficiency == 2:
            assert len(classes) == 1


def test_catalog_entries_are_lean(catalogs):
    finder = AutarkyFinder()
    for catalog in catalogs.values():
        for entry in catalog.entries:
            assert finder.is_lean(entry_clause_set(entry))


def test_lean_kernels_are_order_independent():
    rng = random.Random(11)
    finder = AutarkyFinder()
    for _ in range(500):
        n = rng.randint(1, 10)
        cs = random_clause_set(rng, n, rng.randint(1, 2 * n), max_len=3)
        order = sorted(cs.variables)
        rng.shuffle(order)
        assert finder.lean_kernel(cs) == finder.lean_kernel(cs, order)


def test_weight_criterion_matches_oracle():
    rng = random.Random(13)
    analyzer = MUAnalyzer()
    oracle = SatOracle()
    for _ in range(1000):
        cs = random_hitting_clause_set(
            rng, rng.randint(1, 10), rng.randint(0, 12), drop=rng.randint(0, 1)
        )
        assert analyzer.is_unsat_hitting(cs) == (not oracle.is_satisfiable(cs))


def test_oracle_soundness():
    rng = random.Random(17)
    oracle = SatOracle()
    for _ in range(1000):
        n = rng.randint(1, 8)
        cs = random_clause_set(rng, n, rng.randint(1, 3 * n), max_len=3)
        expected = brute_force_sat(cs)
        assert oracle.is_satisfiable(cs) == expected
        if cs.variables:
            var = rng.choice(sorted(cs.variables))
            assert brute_force_sat(dp_reduce(cs, var)) == expected
            value = rng.random() < 0.5
            reduced = apply_assignment(cs, {var: value})
            models = [m for m in brute_force_models(cs) if m[var] == value]
            assert bool(models) == brute_force_sat(reduced)


def test_constants_report_at_default_bounds():
    checker = ConstantsChecker(CatalogEnumerator(workers=2), confluence_samples=50)
    report = checker.check_constants()
    statuses = {row.name: row.status for row in report.checks}
    assert not report.failed
    assert statuses["muNM(1)"] == CheckStatus.PASS
    assert statuses["muNM(2)"] == CheckStatus.PASS
    assert statuses["FC(1)"] == CheckStatus.PASS
    assert statuses["FC(2)"] == CheckStatus.PASS
    assert statuses["uhit-nonsingular-max-n(2)"] == CheckStatus.PASS
    assert statuses["confluence-n"] == CheckStatus.PASS
