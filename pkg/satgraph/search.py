"""
Exhaustive search for the fewest and most edges of saturated graphs on few vertices.

`search_optimum` walks edge counts upward (``sat``) or downward (``ex``) and, for each
count, enumerates labeled graphs with that many edges, stopping at the first count where
some graph is saturated. Enumeration fills the adjacency matrix one row at a time and only
produces graphs whose degrees are nonincreasing in vertex order, which keeps at least one
labeling of every isomorphism class. Candidates are pruned before the expensive verdict:

* every vertex of a saturated graph on more than *k* vertices has degree at least *k-1*,
  and the graph is connected;
* for every non-edge *uv*, the *k*-core of the graph plus *uv* must contain *u* and *v*;
* for k-edge-connectivity, the edge connectivity must be exactly *k-1*.

The neighborhoods of vertex 0 split the work into independent tasks which can run in
worker processes; results are merged in task order, so the output does not depend on
scheduling.
"""
import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, Optional, Tuple

from attr import attrib, attrs, validators

from satgraph.bitsets import bitset, component_of, full, iter_bits, k_core, popcount
from satgraph.budgets import Budget, check_budget
from satgraph.connectivity import edge_connectivity
from satgraph.constructions import build_complete
from satgraph.graph import Graph
from satgraph.io_utils import edge_list_string
from satgraph.preconditions import check_arg, check_state
from satgraph.saturation import Family, SearchMode, SearchResult, is_saturated

import networkx as nx

log = logging.getLogger(__name__)  # pylint:disable=invalid-name


def edge_count_range(n: int, k: int, family: Family, mode: SearchMode) -> range:
    """
    The edge counts to try, in order, for ``n >= k + 1`` and ``k >= 2``.

    A saturated graph is connected with minimum degree at least *k-1*, so it has at least
    ``max(ceil(n(k-1)/2), n-1)`` edges. A graph without a k-edge-connected subgraph has at
    most ``(k-1)(n-1)`` edges.
    """
    pairs = comb(n, 2)
    if mode is SearchMode.SAT:
        return range(max(-(-n * (k - 1) // 2), n - 1), pairs + 1)
    top = min(pairs, (k - 1) * (n - 1)) if family is Family.EDGE else pairs
    return range(top, -1, -1)


@attrs(frozen=True, slots=True)
class _LevelTask:
    n: int = attrib(validator=validators.instance_of(int))
    k: int = attrib(validator=validators.instance_of(int))
    family: Family = attrib(validator=validators.instance_of(Family))
    m: int = attrib(validator=validators.instance_of(int))
    row_zero: int = attrib(validator=validators.instance_of(int))


def _fingerprint(g: Graph) -> Tuple:
    return tuple(
        sorted(
            (popcount(neighbors), tuple(sorted(g.degree(u) for u in iter_bits(neighbors))))
            for neighbors in g.adjacency
        )
    )


class _IsomorphismClasses:
    """
    One representative per isomorphism class, bucketed by a cheap invariant.
    """

    def __init__(self) -> None:
        self._buckets: Dict[Tuple, List[Tuple[Graph, nx.Graph]]] = {}

    def add(self, g: Graph) -> bool:
        bucket = self._buckets.setdefault(_fingerprint(g), [])
        as_networkx = g.to_networkx()
        if any(nx.is_isomorphic(as_networkx, rep) for (_, rep) in bucket):
            return False
        bucket.append((g, as_networkx))
        return True

    def canonical_witnesses(self) -> Dict[str, str]:
        """
        Map from canonical form to the canonical edge list of each representative.

        The search budget has already admitted graphs of this size.
        """
        return {
            g.canonical_form(g.n): edge_list_string(g.canonical_graph(g.n))
            for bucket in self._buckets.values()
            for (g, _) in bucket
        }


class _LevelSearch:
    """
    Enumerates the graphs with *m* edges and a fixed neighborhood of vertex 0.
    """

    def __init__(self, task: _LevelTask) -> None:
        self.n = task.n
        self.k = task.k
        self.family = task.family
        self.m = task.m
        self.row_zero = task.row_zero
        self.min_degree = task.k - 1
        self.everything = full(task.n)
        self.adjacency = [0] * task.n
        self.examined = 0
        self.classes = _IsomorphismClasses()

    def run(self) -> Tuple[int, Dict[str, str]]:
        self._place_row(0, self.row_zero, self.m, self.n - 1)
        return (self.examined, self.classes.canonical_witnesses())

    def _place_row(self, u: int, chosen: int, remaining: int, degree_bound: int) -> None:
        """
        Join *u* to the later vertices in *chosen*, check the partial graph can still be
        completed, and continue with the next row.
        """
        adjacency = self.adjacency
        degree = popcount(adjacency[u]) + popcount(chosen)
        remaining -= popcount(chosen)
        later = self.n - 1 - u
        if (
            degree > degree_bound
            or degree < self.min_degree
            or remaining < 0
            or remaining > comb(later, 2)
        ):
            return
        for v in iter_bits(chosen):
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        if self._completable(u, degree, remaining):
            if u == self.n - 1:
                self._evaluate()
            else:
                for next_chosen in self._row_choices(u + 1, remaining, degree):
                    self._place_row(u + 1, next_chosen, remaining, degree)
        for v in iter_bits(chosen):
            adjacency[u] &= ~(1 << v)
            adjacency[v] &= ~(1 << u)

    def _completable(self, u: int, degree: int, remaining: int) -> bool:
        if u == self.n - 1:
            return remaining == 0
        # each later vertex can still gain one edge from every other later vertex
        still_open = self.n - 2 - u
        room = 0
        deficit = 0
        for v in range(u + 1, self.n):
            partial = popcount(self.adjacency[v])
            if partial > degree or partial + still_open < self.min_degree:
                return False
            room += degree - partial
            deficit += max(0, self.min_degree - partial)
        return deficit <= 2 * remaining <= room

    def _row_choices(self, u: int, remaining: int, degree_bound: int) -> Iterator[int]:
        candidates = range(u + 1, self.n)
        partial = popcount(self.adjacency[u])
        largest = min(len(candidates), remaining, degree_bound - partial)
        smallest = max(0, self.min_degree - partial)
        for size in range(largest, smallest - 1, -1):
            for chosen in combinations(candidates, size):
                yield bitset(chosen)

    def _evaluate(self) -> None:
        self.examined += 1
        adjacency = self.adjacency
        if component_of(adjacency, 0, self.everything) != self.everything:
            return
        for u in range(self.n):
            for v in iter_bits(self.everything & ~adjacency[u] & ~full(u + 1)):
                augmented = list(adjacency)
                augmented[u] |= 1 << v
                augmented[v] |= 1 << u
                endpoints = (1 << u) | (1 << v)
                if k_core(augmented, self.k, self.everything) & endpoints != endpoints:
                    return
        g = Graph(self.n, adjacency)
        if self.family is Family.EDGE and edge_connectivity(g) != self.k - 1:
            return
        if is_saturated(g, self.k, self.family).saturated:
            self.classes.add(g)


def _run_task(task: _LevelTask) -> Tuple[int, Dict[str, str]]:
    return _LevelSearch(task).run()


def _row_zero_choices(n: int, k: int, m: int) -> List[int]:
    """
    Neighborhoods of vertex 0 for graphs with *m* edges and nonincreasing degrees.

    Vertex 0 has the largest degree, so it is at least the average degree ``2m/n``.
    """
    smallest = max(k - 1, -(-2 * m // n))
    largest = min(n - 1, m)
    return [
        bitset(chosen)
        for size in range(largest, smallest - 1, -1)
        for chosen in combinations(range(1, n), size)
    ]


def _search_level(
    n: int, k: int, family: Family, m: int, executor: Optional[Executor]
) -> Tuple[int, Dict[str, str]]:
    tasks = [_LevelTask(n, k, family, m, row_zero) for row_zero in _row_zero_choices(n, k, m)]
    if executor is None:
        results = [_run_task(task) for task in tasks]
    else:
        results = list(executor.map(_run_task, tasks))
    examined = 0
    witnesses: Dict[str, str] = {}
    for (task_examined, task_witnesses) in results:
        examined += task_examined
        for (form, edge_list) in task_witnesses.items():
            witnesses.setdefault(form, edge_list)
    return (examined, witnesses)


def search_optimum(
    n: int,
    k: int,
    family: Family,
    mode: SearchMode,
    *,
    workers: int = 1,
    budget: Optional[int] = None,
) -> SearchResult:
    """
    The fewest (``sat``) or most (``ex``) edges of a saturated graph on *n* vertices.

    The result lists one witness per isomorphism class attaining the optimum. For ``k = 1``
    the only saturated graph is edgeless, and for ``n <= k`` it is the complete graph, so
    neither case searches.

    Raises `BudgetExceededError` if *n* is above the search budget for *family*.
    """
    check_arg(n >= 1, "n must be at least 1 but got %s", (n,))
    check_arg(k >= 1, "k must be at least 1 but got %s", (k,))
    check_arg(workers >= 1, "Need at least one worker but got %s", (workers,))
    check_budget(
        Budget.EDGE_SEARCH if family is Family.EDGE else Budget.VERTEX_SEARCH, n, budget
    )
    start = time.perf_counter()

    if k == 1 or n <= k:
        only = Graph.empty(n) if k == 1 else build_complete(n)
        check_state(
            is_saturated(only, k, family).saturated,
            "%s should be the only saturated graph for k=%s",
            (only, k),
        )
        return SearchResult(
            n=n,
            k=k,
            family=family,
            mode=mode,
            value=only.m,
            witnesses=[edge_list_string(only)],
            graphs_examined=1,
            elapsed_ms=(time.perf_counter() - start) * 1000,
        )

    examined = 0
    value = -1
    witnesses: Dict[str, str] = {}
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for m in edge_count_range(n, k, family, mode):
            (level_examined, witnesses) = _search_level(n, k, family, m, executor)
            examined += level_examined
            log.info(
                "%s search n=%s k=%s %s: %s edges, %s candidates, %s saturated classes",
                family.value,
                n,
                k,
                mode.value,
                m,
                level_examined,
                len(witnesses),
            )
            if witnesses:
                value = m
                break
        else:
            check_state(False, "No saturated graph on %s vertices for k=%s", (n, k))
    finally:
        if executor is not None:
            executor.shutdown()

    ret = SearchResult(
        n=n,
        k=k,
        family=family,
        mode=mode,
        value=value,
        witnesses=[witnesses[form] for form in sorted(witnesses)],
        graphs_examined=examined,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )
    if not ret.matches_formula:
        log.warning(
            "Searched %s value %s for n=%s, k=%s (%s) but the closed form gives %s",
            mode.value,
            ret.value,
            n,
            k,
            family.value,
            ret.expected_value,
        )
    return ret


def check_sat_at_most_ex(sat_result: SearchResult, ex_result: SearchResult) -> None:
    """
    Check that a ``sat`` and an ``ex`` search over the same graphs are consistent.
    """
    check_arg(
        (sat_result.n, sat_result.k, sat_result.family)
        == (ex_result.n, ex_result.k, ex_result.family)
        and sat_result.mode is SearchMode.SAT
        and ex_result.mode is SearchMode.EX,
        "Expected a sat and an ex result for the same n, k and family",
    )
    check_state(
        sat_result.value <= ex_result.value,
        "sat value %s exceeds ex value %s for n=%s, k=%s",
        (sat_result.value, ex_result.value, sat_result.n, sat_result.k),
    )
