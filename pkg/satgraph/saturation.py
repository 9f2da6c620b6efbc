"""
Saturation verdicts for k-edge-connectivity and k-connectivity.

A graph *G* is saturated for a family of graphs if no subgraph of *G* belongs to the family
but adding any edge of the complement of *G* creates one. The two families handled here
are the *k*-edge-connected graphs (`Family.EDGE`) and the *k*-connected graphs
(`Family.VERTEX`).

Besides the verdicts themselves, this module holds the structural checks that every
graph saturated for k-edge-connectivity must pass (`lemma_invariant_suite`), the check
that extremal graphs arise by adding a vertex of degree *k-1*
(`check_extremal_structure`), and the closed-form optima which exhaustive search is
expected to reproduce (`expected_optimum`).
"""
import logging
from enum import Enum
from math import comb
from typing import Any, Dict, List, Optional, Tuple

from attr import attrib, attrs, validators

from immutablecollections import ImmutableSet, immutableset

from satgraph.bitsets import popcount
from satgraph.connectivity import (
    SubgraphWitness,
    contains_k_minus,
    edge_connectivity,
    global_min_edge_cut,
    has_k_connected_subgraph,
    has_k_edge_connected_subgraph,
)
from satgraph.constructions import ex_formula, rho
from satgraph.graph import Edge, Graph
from satgraph.io_utils import parse_edge_list
from satgraph.preconditions import check_arg

log = logging.getLogger(__name__)  # pylint:disable=invalid-name


class Family(Enum):
    """
    Which connectivity defines membership in the forbidden family.
    """

    EDGE = "edge"
    VERTEX = "vertex"


class Verdict(Enum):
    SATURATED = "saturated"
    CONTAINS_MEMBER = "contains-member"
    MISSES_EDGE = "misses-edge"


class SearchMode(Enum):
    """
    Whether a search looks for the fewest (``sat``) or most (``ex``) edges.
    """

    SAT = "sat"
    EX = "ex"


@attrs(frozen=True, slots=True)
class SaturationReport:
    """
    The outcome of a saturation check.

    If *verdict* is `Verdict.CONTAINS_MEMBER`, *witness* is a member of the family found in
    the graph. If it is `Verdict.MISSES_EDGE`, *missing_edge* is a non-edge whose addition
    creates no member. A saturated report carries neither.
    """

    family: Family = attrib(validator=validators.instance_of(Family))
    k: int = attrib(validator=validators.instance_of(int))
    verdict: Verdict = attrib(validator=validators.instance_of(Verdict))
    witness: Optional[SubgraphWitness] = attrib(
        validator=validators.optional(validators.instance_of(SubgraphWitness)),
        default=None,
        kw_only=True,
    )
    missing_edge: Optional[Edge] = attrib(
        converter=lambda edge: None if edge is None else tuple(edge),
        default=None,
        kw_only=True,
    )

    def __attrs_post_init__(self) -> None:
        check_arg(
            (self.witness is not None) == (self.verdict is Verdict.CONTAINS_MEMBER),
            "A witness is given exactly for contains-member verdicts",
        )
        check_arg(
            (self.missing_edge is not None) == (self.verdict is Verdict.MISSES_EDGE),
            "A missing edge is given exactly for misses-edge verdicts",
        )

    @property
    def saturated(self) -> bool:
        return self.verdict is Verdict.SATURATED

    def to_json(self) -> Dict[str, Any]:
        ret: Dict[str, Any] = {
            "family": self.family.value,
            "k": self.k,
            "verdict": self.verdict.value,
        }
        if self.witness is not None:
            ret["witness"] = self.witness.to_json()
        if self.missing_edge is not None:
            ret["missing_edge"] = list(self.missing_edge)
        return ret


def _find_member(
    g: Graph, k: int, family: Family, *, containing: int = 0, budget: Optional[int] = None
) -> Optional[SubgraphWitness]:
    if family is Family.EDGE:
        return has_k_edge_connected_subgraph(g, k, containing=containing)
    return has_k_connected_subgraph(g, k, containing=containing, budget=budget)


def is_saturated(
    g: Graph, k: int, family: Family, *, budget: Optional[int] = None
) -> SaturationReport:
    """
    Check whether *g* is saturated for the *k*-edge-connected or *k*-connected graphs.

    Complement edges are tried in lexicographic order and the first one whose addition
    creates no member of the family is reported. Since *g* itself has no member, any member
    of *g + uv* must contain both *u* and *v*; before running a detector, the *k*-core of
    *g + uv* is checked to contain them.

    *budget* only applies to the k-connected detector.
    """
    check_arg(k >= 1, "k must be at least 1 but got %s", (k,))
    witness = _find_member(g, k, family, budget=budget)
    if witness is not None:
        log.debug("Graph contains a %s-%s subgraph on %s", k, family.value, witness.vertices())
        return SaturationReport(family, k, Verdict.CONTAINS_MEMBER, witness=witness)
    for (u, v) in g.complement_edges():
        augmented = g.with_edge(u, v)
        endpoints = (1 << u) | (1 << v)
        if augmented.k_core(k) & endpoints != endpoints or (
            _find_member(augmented, k, family, containing=endpoints, budget=budget) is None
        ):
            log.debug("Adding %s creates no %s-%s subgraph", (u, v), k, family.value)
            return SaturationReport(family, k, Verdict.MISSES_EDGE, missing_edge=(u, v))
    return SaturationReport(family, k, Verdict.SATURATED)


def is_saturated_edge(g: Graph, k: int) -> SaturationReport:
    """
    Check whether *g* is saturated for the *k*-edge-connected graphs.
    """
    return is_saturated(g, k, Family.EDGE)


def is_saturated_vertex(g: Graph, k: int, *, budget: Optional[int] = None) -> SaturationReport:
    """
    Check whether *g* is saturated for the *k*-connected graphs.

    Raises `BudgetExceededError` if *g* is too large for the k-connected detector.
    """
    return is_saturated(g, k, Family.VERTEX, budget=budget)


def is_nontrivially_saturated(g: Graph, k: int) -> bool:
    """
    Whether *g* is saturated for the *k*-edge-connected graphs and is not complete.
    """
    return not g.is_complete() and is_saturated_edge(g, k).saturated


class LemmaCheck(Enum):
    """
    Structural properties of graphs saturated for k-edge-connectivity on more than *k*
    vertices.

    * ``EDGE_CONNECTIVITY``: the edge connectivity is exactly *k-1*.
    * ``CUT_DECOMPOSITION``: for a minimum cut whose side *S* is the larger, *S* induces a
      non-complete saturated graph, and the other side induces a single vertex or a
      non-complete saturated graph.
    * ``K_MINUS_CONTAINMENT``: some *k+1* vertices induce the complete graph minus one
      edge.
    """

    EDGE_CONNECTIVITY = "edge-connectivity-is-k-minus-1"
    CUT_DECOMPOSITION = "min-cut-sides-are-saturated"
    K_MINUS_CONTAINMENT = "contains-k-minus"


class CheckOutcome(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


def lemma_invariant_suite(g: Graph, k: int) -> List[Tuple[LemmaCheck, CheckOutcome]]:
    """
    Run every `LemmaCheck` on a graph saturated for the *k*-edge-connected graphs.

    *g* must have at least *k+1* vertices. The cut decomposition check needs ``k >= 3`` and
    at least *k+2* vertices and is skipped otherwise.

    Raises `ValueError` if *g* is not saturated.
    """
    check_arg(k >= 2, "k must be at least 2 but got %s", (k,))
    check_arg(g.n >= k + 1, "Need at least k+1=%s vertices but got %s", (k + 1, g.n))
    report = is_saturated_edge(g, k)
    check_arg(
        report.saturated,
        "The lemma suite only applies to saturated graphs but got verdict %s",
        (report.verdict.value,),
    )

    ret = [
        (
            LemmaCheck.EDGE_CONNECTIVITY,
            _outcome(edge_connectivity(g) == k - 1),
        )
    ]

    if k >= 3 and g.n >= k + 2:
        cut = global_min_edge_cut(g)
        (larger, smaller) = (
            (cut.side, cut.other_side)
            if popcount(cut.side) >= popcount(cut.other_side)
            else (cut.other_side, cut.side)
        )
        larger_graph = g.induced_subgraph(larger).graph
        smaller_graph = g.induced_subgraph(smaller).graph
        ret.append(
            (
                LemmaCheck.CUT_DECOMPOSITION,
                _outcome(
                    cut.size == k - 1
                    and is_nontrivially_saturated(larger_graph, k)
                    and (smaller_graph.n == 1 or is_nontrivially_saturated(smaller_graph, k))
                ),
            )
        )
    else:
        ret.append((LemmaCheck.CUT_DECOMPOSITION, CheckOutcome.SKIPPED))

    ret.append(
        (LemmaCheck.K_MINUS_CONTAINMENT, _outcome(contains_k_minus(g, k) is not None))
    )
    for (check, outcome) in ret:
        if outcome is CheckOutcome.FAIL:
            log.warning("%s failed on %s with k=%s", check.value, g, k)
    return ret


def _outcome(passed: bool) -> CheckOutcome:
    return CheckOutcome.PASS if passed else CheckOutcome.FAIL


def expected_optimum(n: int, k: int, family: Family, mode: SearchMode) -> Optional[int]:
    """
    The proven closed form for the fewest or most edges of a saturated graph on *n*
    vertices, or ``None`` if there is none.

    On at most *k* vertices, no member of either family fits, so only the complete graph is
    saturated. Otherwise, for k-edge-connectivity the minimum is `rho` and the maximum is
    `ex_formula`; for k-connectivity the minimum is `ex_formula` and the maximum is only
    known for ``k = 1``, where saturated graphs are edgeless.
    """
    check_arg(n >= 1, "n must be at least 1 but got %s", (n,))
    check_arg(k >= 1, "k must be at least 1 but got %s", (k,))
    if n <= k:
        return comb(n, 2)
    if family is Family.EDGE:
        return rho(k, n) if mode is SearchMode.SAT else ex_formula(k, n)
    if mode is SearchMode.SAT:
        return ex_formula(k, n)
    return 0 if k == 1 else None


@attrs(frozen=True, slots=True)
class SearchResult:
    """
    The optimum found by exhaustive search, with one witness graph per isomorphism class
    attaining it.

    *witnesses* are canonical edge-list strings (see `satgraph.io_utils.edge_list_string`)
    of canonically relabeled graphs, sorted by canonical form.
    """

    n: int = attrib(validator=validators.instance_of(int))
    k: int = attrib(validator=validators.instance_of(int))
    family: Family = attrib(validator=validators.instance_of(Family))
    mode: SearchMode = attrib(validator=validators.instance_of(SearchMode))
    value: int = attrib(validator=validators.instance_of(int))
    witnesses: ImmutableSet[str] = attrib(converter=immutableset)
    graphs_examined: int = attrib(validator=validators.instance_of(int))
    elapsed_ms: float = attrib(converter=float, eq=False)

    def __attrs_post_init__(self) -> None:
        check_arg(self.witnesses, "A search result needs at least one witness")

    def witness_graphs(self) -> List[Graph]:
        return [parse_edge_list(witness) for witness in self.witnesses]

    @property
    def expected_value(self) -> Optional[int]:
        return expected_optimum(self.n, self.k, self.family, self.mode)

    @property
    def matches_formula(self) -> bool:
        """
        False only if there is a closed form and the searched value differs from it.
        """
        expected = self.expected_value
        return expected is None or expected == self.value

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "family": self.family.value,
            "mode": self.mode.value,
            "value": self.value,
            "witnesses": list(self.witnesses),
            "graphs_examined": self.graphs_examined,
            "elapsed_ms": self.elapsed_ms,
        }


def check_extremal_structure(result: SearchResult) -> bool:
    """
    Whether every witness of a k-edge-connectivity ``ex`` search arises from a graph with
    the most edges on one fewer vertex by adding a vertex with *k-1* neighbors.

    That is, each witness must have a vertex of degree *k-1* whose deletion leaves a
    saturated graph with ``ex_formula(k, n - 1)`` edges. For ``n = k + 1`` the deleted graph
    is the complete graph on *k* vertices, which is trivially saturated.
    """
    check_arg(
        result.family is Family.EDGE and result.mode is SearchMode.EX,
        "Extremal structure is only defined for k-edge-connectivity ex searches",
    )
    check_arg(
        result.n >= max(2, result.k + 1),
        "Need n >= k+1 = %s but got %s",
        (result.k + 1, result.n),
    )
    return all(
        any(_deletion_is_extremal(g, v, result.k) for v in range(g.n))
        for g in result.witness_graphs()
    )


def _deletion_is_extremal(g: Graph, v: int, k: int) -> bool:
    if g.degree(v) != k - 1:
        return False
    reduced = g.without_vertex(v).graph
    return reduced.m == ex_formula(k, g.n - 1) and is_saturated_edge(reduced, k).saturated
