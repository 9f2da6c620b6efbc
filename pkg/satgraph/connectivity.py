"""
Edge and vertex connectivity, minimum cuts, and detectors for highly connected subgraphs.

Minimum edge cuts come from unit-capacity maximum flows (`networkx`), so every edge
connectivity value is backed by a `Cut` certificate whose crossing edges can be counted
independently.
"""
import logging
from enum import Enum
from math import comb
from typing import Any, Dict, Optional, Set, Tuple

from attr import attrib, attrs, validators

from satgraph.bitsets import iter_bits, popcount, to_tuple
from satgraph.budgets import Budget, check_budget
from satgraph.graph import Cut, Graph
from satgraph.preconditions import check_arg, check_state

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

log = logging.getLogger(__name__)  # pylint:disable=invalid-name


class ConnectivityKind(Enum):
    EDGE = "edge-connected"
    VERTEX = "vertex-connected"


@attrs(frozen=True, slots=True)
class SubgraphWitness:
    """
    The vertex set of a subgraph which is *level*-edge-connected or *level*-connected.

    The subgraph is the one induced by *verts*.
    """

    verts: int = attrib(validator=validators.instance_of(int))
    kind: ConnectivityKind = attrib(validator=validators.instance_of(ConnectivityKind))
    level: int = attrib(validator=validators.instance_of(int))

    def __attrs_post_init__(self) -> None:
        check_arg(self.verts > 0, "A witness needs at least one vertex")
        check_arg(self.level >= 1, "Witness level must be positive but got %s", (self.level,))

    def vertices(self) -> Tuple[int, ...]:
        return to_tuple(self.verts)

    def to_json(self) -> Dict[str, Any]:
        return {"vertices": list(self.vertices()), "kind": self.kind.value, "level": self.level}


def _flow_network(g: Graph) -> nx.DiGraph:
    network = nx.DiGraph()
    network.add_nodes_from(range(g.n))
    for (u, v) in g.edges():
        network.add_edge(u, v, capacity=1)
        network.add_edge(v, u, capacity=1)
    return network


def _residual_source_side(residual: nx.DiGraph, source: int) -> int:
    """
    The vertices reachable from *source* through arcs with spare capacity.
    """
    reached = 1 << source
    frontier = [source]
    while frontier:
        u = frontier.pop()
        for (v, arc) in residual[u].items():
            if arc["capacity"] - arc["flow"] > 0 and not (reached >> v) & 1:
                reached |= 1 << v
                frontier.append(v)
    return reached


def _minimum_cut_side(g: Graph, cutoff: Optional[int] = None) -> Optional[Tuple[int, int]]:
    """
    The value and source side of a minimum edge cut of the connected graph *g*.

    A maximum flow is run from vertex 0 to every other vertex; the source side of each is
    the set reachable from 0 in its residual network. Among cuts of minimum value, the
    numerically smallest source side is returned.

    If *cutoff* is given, flows stop once they reach it and only cuts of value below
    *cutoff* are considered; ``None`` is returned if there are none.
    """
    network = _flow_network(g)
    best: Optional[Tuple[int, int]] = None
    for sink in range(1, g.n):
        residual = edmonds_karp(network, 0, sink, cutoff=cutoff)
        value = residual.graph["flow_value"]
        if cutoff is not None and value >= cutoff:
            continue
        candidate = (value, _residual_source_side(residual, 0))
        if best is None or candidate < best:
            best = candidate
    return best


def global_min_edge_cut(g: Graph) -> Cut:
    """
    A minimum edge cut of *g*.

    The cut's side always contains vertex 0. For a disconnected graph it is the component
    of vertex 0 and the cut is empty.
    """
    check_arg(g.n >= 2, "A cut needs at least 2 vertices but got %s", (g.n,))
    if not g.is_connected():
        return Cut.of_side(g, g.components()[0])
    best = _minimum_cut_side(g)
    check_state(best is not None, "A connected graph always has a minimum cut")
    (value, side) = best  # type: ignore
    ret = Cut.of_side(g, side)
    check_state(
        ret.size == value,
        "Flow value %s does not match the %s crossing edges of its cut",
        (value, ret.size),
    )
    return ret


def edge_connectivity(g: Graph) -> int:
    """
    The minimum number of edges whose removal disconnects *g*.

    Disconnected graphs have edge connectivity 0.
    """
    return global_min_edge_cut(g).size


def vertex_connectivity(g: Graph) -> int:
    """
    The minimum number of vertices whose removal disconnects *g* or leaves one vertex.

    Complete graphs on *n* vertices have vertex connectivity *n-1*.
    """
    check_arg(g.n >= 2, "Vertex connectivity needs at least 2 vertices but got %s", (g.n,))
    if g.is_complete():
        return g.n - 1
    return nx.node_connectivity(g.to_networkx())


def minimum_vertex_cut(g: Graph) -> int:
    """
    A minimum set of vertices whose removal disconnects the non-complete graph *g*.

    Returns the empty set for a disconnected graph.
    """
    check_arg(g.n >= 2, "Vertex cuts need at least 2 vertices but got %s", (g.n,))
    check_arg(not g.is_complete(), "Complete graphs have no vertex cut")
    if not g.is_connected():
        return 0
    ret = 0
    for v in nx.minimum_node_cut(g.to_networkx()):
        ret |= 1 << v
    return ret


def has_k_edge_connected_subgraph(
    g: Graph, k: int, *, containing: int = 0
) -> Optional[SubgraphWitness]:
    """
    Find a *k*-edge-connected subgraph of *g* on at least two vertices, if there is one.

    Every such subgraph lies in the *k*-core, and it cannot have vertices on both sides of
    a cut of fewer than *k* edges. So starting from the components of the *k*-core, any
    piece with a cut below *k* is split into the two sides of a minimum cut (and the
    pieces re-cored), and the first piece with no such cut is returned.

    If *containing* is nonzero, only subgraphs including all of those vertices are
    sought and pieces missing any of them are discarded.
    """
    check_arg(k >= 1, "k must be at least 1 but got %s", (k,))
    pending = [g.k_core(k)]
    seen: Set[int] = set()
    while pending:
        piece = g.k_core(k, within=pending.pop())
        if piece in seen or popcount(piece) < 2 or piece & containing != containing:
            continue
        seen.add(piece)
        pieces = g.components(within=piece)
        if len(pieces) > 1:
            pending.extend(reversed(pieces))
            continue
        induced = g.induced_subgraph(piece)
        cut = _minimum_cut_side(induced.graph, cutoff=k)
        if cut is None:
            return SubgraphWitness(piece, ConnectivityKind.EDGE, k)
        (value, side) = cut
        lifted = induced.lift(side)
        log.debug(
            "Splitting %s vertices along a cut of size %s", popcount(piece), value
        )
        pending.extend((piece & ~lifted, lifted))
    return None


def has_k_connected_subgraph(
    g: Graph, k: int, *, containing: int = 0, budget: Optional[int] = None
) -> Optional[SubgraphWitness]:
    """
    Find a *k*-connected subgraph of *g*, if there is one.

    Pieces start as the components of the *k*-core. A complete piece on more than *k*
    vertices is a witness, as is any piece whose vertex connectivity is at least *k*.
    Otherwise, for a minimum vertex cut *C* of the piece, the search continues on each
    component of the piece minus *C*, together with *C*. This is exact: a *k*-connected
    subgraph minus fewer than *k* vertices stays connected, so it lies in one of those.

    Raises `BudgetExceededError` if *g* has more vertices than the detector's budget.
    """
    check_arg(k >= 1, "k must be at least 1 but got %s", (k,))
    check_budget(Budget.K_CONNECTED_DETECTOR, g.n, budget)
    pending = [g.k_core(k)]
    seen: Set[int] = set()
    while pending:
        piece = g.k_core(k, within=pending.pop())
        if piece in seen or popcount(piece) <= k or piece & containing != containing:
            continue
        seen.add(piece)
        pieces = g.components(within=piece)
        if len(pieces) > 1:
            pending.extend(reversed(pieces))
            continue
        induced = g.induced_subgraph(piece)
        if induced.graph.is_complete() or vertex_connectivity(induced.graph) >= k:
            return SubgraphWitness(piece, ConnectivityKind.VERTEX, k)
        separator = induced.lift(minimum_vertex_cut(induced.graph))
        log.debug(
            "Splitting %s vertices along a vertex cut of size %s",
            popcount(piece),
            popcount(separator),
        )
        for component in reversed(g.components(within=piece & ~separator)):
            pending.append(component | separator)
    return None


def contains_k_minus(g: Graph, k: int) -> Optional[int]:
    """
    Find *k+1* vertices inducing at least ``C(k+1, 2) - 1`` edges, if there are any.

    Such a set induces the complete graph on *k+1* vertices with at most one edge missing.
    The lexicographically first such set (as a sorted vertex tuple) is returned as a
    bitset.
    """
    check_arg(k >= 2, "k must be at least 2 but got %s", (k,))
    if g.n < k + 1 or g.m < comb(k + 1, 2) - 1:
        return None
    candidates = list(iter_bits(g.k_core(k - 1)))
    adjacency = g.adjacency

    def extend(chosen: int, size: int, missing: int, start: int) -> Optional[int]:
        if size == k + 1:
            return chosen
        for index in range(start, len(candidates) - (k - size)):
            v = candidates[index]
            new_missing = missing + size - popcount(adjacency[v] & chosen)
            if new_missing <= 1:
                found = extend(chosen | (1 << v), size + 1, new_missing, index + 1)
                if found is not None:
                    return found
        return None

    return extend(0, 0, 0, 0)


def is_k_edge_connected(g: Graph, k: int) -> bool:
    """
    Whether *g* has at least two vertices and edge connectivity at least *k*.
    """
    return g.n >= 2 and edge_connectivity(g) >= k


def is_k_connected(g: Graph, k: int) -> bool:
    """
    Whether *g* has more than *k* vertices and vertex connectivity at least *k*.
    """
    return g.n > k and vertex_connectivity(g) >= k
