# /src/core/enumeration/enumerator.py

"""Orderly generation of MU(δ=k) and UHit(δ=k) catalogs up to isomorphism."""

import logging
from typing import Dict, List, NamedTuple, Optional, Tuple

from schemas.enumeration import (
    Catalog,
    CatalogEntry,
    CatalogHeader,
    CellSummary,
    EntryFlags,
    EnumSpec,
)
from ..analysis.mu import MUAnalyzer
from ..cnf.clause_set import ClauseSet
from ..cnf.dimacs import render_body
from ..cnf.metrics import full_clause_count, is_hitting, min_var_degree
from ..errors import check_cap
from ..parallel import run_jobs
from ..reduction.dp import singular_variables
from ..reduction.isomorphism import IsomorphismChecker
from .universe import ClauseUniverse, universe_for

logger = logging.getLogger(__name__)

# Canonical prefixes of this length partition a cell into independent jobs.
PARTITION_DEPTH = 2


class SearchJob(NamedTuple):
    n: int
    clause_count: int
    hitting: bool
    nonsingular: bool
    prefix: Tuple[int, ...]
    budget: int


class JobResult(NamedTuple):
    found: List[ClauseSet]
    nodes: int
    complete: bool


class _State(NamedTuple):
    weight: int
    covered: int
    forbidden: int
    allowed: int


class CellSearch:
    """
    Clause-by-clause backtracking over one (n, c) cell.

    Prefixes are sorted index tuples over the clause universe. A prefix is
    extended only if it stays a minimal image under all signed renamings,
    stays subsumption-free (and pairwise clashing for hitting cells), can
    still reach total weight 1 and can still cover all 2n literals.
    """

    def __init__(
        self,
        universe: ClauseUniverse,
        clause_count: int,
        hitting: bool = False,
        nonsingular: bool = False,
        budget: Optional[int] = None,
        analyzer: Optional[MUAnalyzer] = None,
    ):
        self.universe = universe
        self.clause_count = clause_count
        self.hitting = hitting
        self.nonsingular = nonsingular
        self.budget = budget
        self.analyzer = analyzer or MUAnalyzer()
        self.nodes = 0
        self.truncated = False
        self.found: List[ClauseSet] = []

    def initial_state(self) -> _State:
        everything = (1 << self.universe.size) - 1
        return _State(0, 0, 0, everything)

    def state_of(self, prefix: Tuple[int, ...]) -> Optional[_State]:
        state = self.initial_state()
        for position, idx in enumerate(prefix):
            state = self._push(state, idx, self.clause_count - position)
            if state is None:
                return None
        return state

    def _push(self, state: _State, idx: int, remaining: int) -> Optional[_State]:
        """Add clause `idx` with `remaining` clauses (itself included) still to place."""
        bit = 1 << idx
        if state.forbidden & bit or not state.allowed & bit:
            return None
        u = self.universe
        weight = state.weight + u.weights[idx]
        if self.hitting and weight > u.target_weight:
            return None
        covered = state.covered | u.literal_bits[idx]
        missing = bin(u.all_literals & ~covered).count("1")
        if missing > (remaining - 1) * u.n:
            return None
        allowed = state.allowed & u.clash_masks[idx] if self.hitting else state.allowed
        return _State(weight, covered, state.forbidden | u.superset_masks[idx], allowed)

    def search(self, prefix: List[int], state: _State, stop_depth: Optional[int] = None,
               collected: Optional[List[Tuple[int, ...]]] = None) -> None:
        """
        Extend `prefix` depth-first in index order.

        Args:
            prefix: Current sorted index tuple, extended in place
            state: Aggregates of the prefix
            stop_depth: Collect prefixes of this length instead of completing them
            collected: Receives the prefixes reaching stop_depth
        """
        if stop_depth is not None and len(prefix) == stop_depth:
            collected.append(tuple(prefix))
            return
        if len(prefix) == self.clause_count:
            self._complete(prefix, state)
            return

        u = self.universe
        remaining = self.clause_count - len(prefix)
        start = prefix[-1] + 1 if prefix else 0
        for idx in range(start, u.size - remaining + 1):
            if self.truncated:
                return
            if self.budget is not None and self.nodes >= self.budget:
                self.truncated = True
                return
            # weights never increase along the universe order
            if state.weight + remaining * u.weights[idx] < u.target_weight:
                break
            extended = self._push(state, idx, remaining)
            if extended is None:
                continue
            self.nodes += 1
            prefix.append(idx)
            if u.is_min_image(prefix):
                self.search(prefix, extended, stop_depth, collected)
            prefix.pop()

    def _complete(self, prefix: List[int], state: _State) -> None:
        u = self.universe
        if state.covered != u.all_literals:
            return
        if state.weight < u.target_weight:
            return
        if self.hitting and state.weight != u.target_weight:
            return
        candidate = ClauseSet.from_clauses(u.decode(prefix))
        if self.nonsingular and singular_variables(candidate):
            return
        if not self.analyzer.is_minimally_unsatisfiable(candidate).is_mu:
            return
        self.found.append(candidate)


def run_search_job(job: SearchJob) -> JobResult:
    """Search every completion of one canonical prefix; runs in worker processes."""
    search = CellSearch(
        universe_for(job.n),
        job.clause_count,
        hitting=job.hitting,
        nonsingular=job.nonsingular,
        budget=job.budget,
    )
    state = search.state_of(job.prefix)
    if state is not None:
        search.search(list(job.prefix), state)
    return JobResult(search.found, search.nodes, not search.truncated)


def catalog_entry(clause_set: ClauseSet) -> CatalogEntry:
    return CatalogEntry(
        clauses=clause_set.to_lists(),
        n=clause_set.n,
        c=clause_set.c,
        deficiency=clause_set.deficiency,
        min_var_degree=min_var_degree(clause_set),
        full_clause_count=full_clause_count(clause_set),
        flags=EntryFlags(
            hitting=is_hitting(clause_set),
            nonsingular=not singular_variables(clause_set),
        ),
    )


def entry_clause_set(entry: CatalogEntry) -> ClauseSet:
    return ClauseSet(entry.clauses)


class CatalogEnumerator:
    """
    Builds catalogs cell by cell: for n = 1..n_max the cell holds clause-sets
    with exactly n variables and c = n + δ clauses.
    """

    def __init__(
        self,
        isomorphism: Optional[IsomorphismChecker] = None,
        general_n_max: int = 4,
        hitting_n_max: int = 5,
        max_deficiency: int = 3,
        node_budget: int = 5_000_000,
        workers: int = 1,
    ):
        """
        Args:
            isomorphism: Checker producing the canonical form of each entry
            general_n_max: Largest n_max accepted without require_hitting
            hitting_n_max: Largest n_max accepted with require_hitting
            max_deficiency: Largest deficiency accepted
            node_budget: Search nodes per job before the job gives up
            workers: Processes running the jobs
        """
        self.isomorphism = isomorphism or IsomorphismChecker()
        self.general_n_max = general_n_max
        self.hitting_n_max = hitting_n_max
        self.max_deficiency = max_deficiency
        self.node_budget = node_budget
        self.workers = workers

    def validate(self, spec: EnumSpec) -> None:
        if spec.require_hitting:
            check_cap("enum_hitting_n_max", self.hitting_n_max, spec.n_max)
        else:
            check_cap("enum_general_n_max", self.general_n_max, spec.n_max)
        check_cap("enum_max_deficiency", self.max_deficiency, spec.deficiency)

    def jobs_for_cell(self, n: int, spec: EnumSpec) -> Tuple[List[SearchJob], int]:
        """
        Split a cell at its canonical prefixes.

        Returns:
            The jobs and the number of nodes spent finding their prefixes
        """
        clause_count = n + spec.deficiency
        universe = universe_for(n)
        search = CellSearch(
            universe, clause_count, spec.require_hitting, spec.require_nonsingular
        )
        prefixes: List[Tuple[int, ...]] = []
        depth = min(PARTITION_DEPTH, clause_count)
        search.search([], search.initial_state(), stop_depth=depth, collected=prefixes)
        jobs = [
            SearchJob(
                n,
                clause_count,
                spec.require_hitting,
                spec.require_nonsingular,
                prefix,
                self.node_budget,
            )
            for prefix in prefixes
        ]
        return jobs, search.nodes

    def enumerate(self, spec: EnumSpec) -> Catalog:
        """
        Enumerate the catalog of a spec.

        Args:
            spec: Class, deficiency and variable bound

        Returns:
            The catalog with entries sorted by (n, canonical rendering)
        """
        self.validate(spec)
        cell_jobs: Dict[int, List[SearchJob]] = {}
        cell_nodes: Dict[int, int] = {}
        all_jobs: List[SearchJob] = []
        for n in range(1, spec.n_max + 1):
            jobs, nodes = self.jobs_for_cell(n, spec)
            cell_jobs[n] = jobs
            cell_nodes[n] = nodes
            all_jobs.extend(jobs)
        logger.info(
            "enumerating δ=%d up to n=%d in %d jobs", spec.deficiency, spec.n_max, len(all_jobs)
        )
        results = iter(run_jobs(run_search_job, all_jobs, self.workers))

        cells: List[CellSummary] = []
        entries: List[CatalogEntry] = []
        for n in range(1, spec.n_max + 1):
            forms: Dict[ClauseSet, None] = {}
            nodes = cell_nodes[n]
            complete = True
            for _ in cell_jobs[n]:
                result = next(results)
                nodes += result.nodes
                complete = complete and result.complete
                for clause_set in result.found:
                    forms.setdefault(self.isomorphism.canonical_form(clause_set), None)
            cell_entries = sorted(
                (catalog_entry(form) for form in forms),
                key=lambda entry: render_body(entry_clause_set(entry)),
            )
            if not complete:
                logger.warning("cell n=%d hit the node budget", n)
            cells.append(
                CellSummary(n=n, count=len(cell_entries), nodes=nodes, exhaustive=complete)
            )
            entries.extend(cell_entries)

        header = CatalogHeader(
            spec=spec, cells=cells, exhaustive=all(cell.exhaustive for cell in cells)
        )
        return Catalog(header=header, entries=entries)
