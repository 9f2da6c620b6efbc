"""
Simple undirected graphs on dense vertex labels.

A `Graph` on *n* vertices has vertices ``0..n-1`` and stores, for each vertex, the bitset
of its neighbors (see `satgraph.bitsets`). Graphs are immutable values: analysis code never
mutates its input, and "adding an edge" produces a new graph. Use `GraphBuilder` when
constructing a graph edge by edge.
"""
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from attr import attrib, attrs, validators

from satgraph.bitsets import (
    bitset,
    component_of,
    components,
    full,
    iter_bits,
    k_core,
    popcount,
)
from satgraph.budgets import Budget, check_budget
from satgraph.misc_utils import str_list_limited
from satgraph.preconditions import check_arg, check_vertex, check_vertex_subset

import networkx as nx

Edge = Tuple[int, int]

# graphs on more vertices are rejected
MAX_VERTICES = 10_000


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@attrs(frozen=True, slots=True)
class DegreeProfile:
    """
    Minimum degree, maximum degree, and the degree of every vertex of a graph.
    """

    min_degree: int = attrib(validator=validators.instance_of(int))
    max_degree: int = attrib(validator=validators.instance_of(int))
    # degrees[v] is the degree of vertex v
    degrees: Tuple[int, ...] = attrib(converter=tuple)

    def degree_sequence(self) -> Tuple[int, ...]:
        """
        The degrees in nonincreasing order.
        """
        return tuple(sorted(self.degrees, reverse=True))


@attrs(frozen=True, slots=True, repr=False)
class Graph:
    """
    An undirected simple graph.

    *adjacency[v]* is the bitset of neighbors of vertex *v*. Adjacency must be symmetric and
    loop-free; this is checked on construction.
    """

    n: int = attrib(validator=validators.instance_of(int))
    adjacency: Tuple[int, ...] = attrib(converter=tuple)
    _num_edges: int = attrib(init=False, eq=False)

    @n.validator
    def _validate_n(self, _attr, n: int) -> None:  # pylint:disable=no-self-use
        check_arg(
            0 <= n <= MAX_VERTICES,
            "Graphs must have between 0 and %s vertices but got %s",
            (MAX_VERTICES, n),
        )

    @adjacency.validator
    def _validate_adjacency(self, _attr, adjacency: Tuple[int, ...]) -> None:
        check_arg(
            len(adjacency) == self.n,
            "Expected %s neighbor sets but got %s",
            (self.n, len(adjacency)),
        )
        for v, neighbors in enumerate(adjacency):
            check_vertex_subset(neighbors, self.n)
            check_arg(not (neighbors >> v) & 1, "Vertex %s has a loop", (v,))
            for u in iter_bits(neighbors):
                check_arg(
                    (adjacency[u] >> v) & 1,
                    "Adjacency is not symmetric: %s lists %s as a neighbor but not vice versa",
                    (v, u),
                )

    @_num_edges.default
    def _count_edges(self) -> int:
        return sum(popcount(neighbors) for neighbors in self.adjacency) // 2

    @staticmethod
    def empty(n: int) -> "Graph":
        """
        The edgeless graph on *n* vertices.
        """
        return Graph(n, (0,) * n)

    @staticmethod
    def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        The graph on *n* vertices with the given edges.

        Repeated edges are ignored; loops and out-of-range vertices raise a `ValueError`.
        """
        builder = GraphBuilder(n)
        builder.add_edges(edges)
        return builder.build()

    @property
    def m(self) -> int:
        """
        The number of edges.
        """
        return self._num_edges

    @property
    def vertex_set(self) -> int:
        return full(self.n)

    def neighbors(self, v: int) -> int:
        return self.adjacency[check_vertex(v, self.n)]

    def degree(self, v: int) -> int:
        return popcount(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.neighbors(u) >> check_vertex(v, self.n)) & 1)

    def edges(self) -> Tuple[Edge, ...]:
        """
        All edges as pairs ``(u, v)`` with ``u < v``, in lexicographic order.
        """
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adjacency[u] >> (u + 1) << (u + 1))
        )

    def complement_edges(self) -> Tuple[Edge, ...]:
        """
        All non-adjacent pairs ``(u, v)`` with ``u < v``, in lexicographic order.
        """
        everything = self.vertex_set
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in iter_bits(
                (everything & ~self.adjacency[u]) >> (u + 1) << (u + 1)
            )
        )

    def with_edge(self, u: int, v: int) -> "Graph":
        """
        This graph plus the edge *uv*.

        Adding an existing edge returns an equal graph.
        """
        check_vertex(u, self.n)
        check_vertex(v, self.n)
        check_arg(u != v, "Cannot add loop at vertex %s", (u,))
        adjacency = list(self.adjacency)
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
        return Graph(self.n, adjacency)

    def induced_subgraph(self, vertices: int) -> "InducedSubgraph":
        """
        The subgraph induced by the bitset *vertices*, relabeled to ``0..|vertices|-1``.

        Vertices keep their relative order, so the returned label map is increasing.
        """
        check_vertex_subset(vertices, self.n)
        labels = tuple(iter_bits(vertices))
        position_of = {v: i for (i, v) in enumerate(labels)}
        adjacency = [
            bitset(position_of[u] for u in iter_bits(self.adjacency[v] & vertices))
            for v in labels
        ]
        return InducedSubgraph(Graph(len(labels), adjacency), labels)

    def without_vertex(self, v: int) -> "InducedSubgraph":
        check_vertex(v, self.n)
        return self.induced_subgraph(self.vertex_set & ~(1 << v))

    def degree_profile(self) -> DegreeProfile:
        check_arg(self.n >= 1, "The degree profile of the empty graph is undefined")
        degrees = tuple(popcount(neighbors) for neighbors in self.adjacency)
        return DegreeProfile(min(degrees), max(degrees), degrees)

    def is_connected(self) -> bool:
        check_arg(self.n >= 1, "Connectivity of the empty graph is undefined")
        return component_of(self.adjacency, 0, self.vertex_set) == self.vertex_set

    def components(self, within: Optional[int] = None) -> List[int]:
        """
        The vertex sets of the connected components, ordered by least member.

        If *within* is given, components of the subgraph it induces are returned.
        """
        return components(self.adjacency, self._subset_or_all(within))

    def k_core(self, k: int, within: Optional[int] = None) -> int:
        """
        The vertex set of the *k*-core (of the subgraph induced by *within*, if given).
        """
        return k_core(self.adjacency, k, self._subset_or_all(within))

    def crossing_edges(self, side: int) -> Tuple[Edge, ...]:
        """
        The edges with exactly one endpoint in *side*, as sorted pairs in lexicographic order.
        """
        check_vertex_subset(side, self.n)
        other = self.vertex_set & ~side
        return tuple(
            sorted(
                _normalize_edge(u, v)
                for u in iter_bits(side)
                for v in iter_bits(self.adjacency[u] & other)
            )
        )

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_regular(self) -> bool:
        return len(set(popcount(neighbors) for neighbors in self.adjacency)) <= 1

    def relabel(self, new_label_of: Sequence[int]) -> "Graph":
        """
        The isomorphic graph in which vertex *v* is renamed *new_label_of[v]*.
        """
        check_arg(
            sorted(new_label_of) == list(range(self.n)),
            "Expected a permutation of 0..%s but got %s",
            (self.n - 1, str_list_limited(new_label_of, 10)),
        )
        return Graph.from_edges(
            self.n, ((new_label_of[u], new_label_of[v]) for (u, v) in self.edges())
        )

    def canonical_form(self, budget: Optional[int] = None) -> str:
        """
        A string which is equal for two graphs iff they are isomorphic.

        The form is the lexicographically least upper-triangle adjacency bit string (pairs
        ``(i, j)``, ``i < j``, in lexicographic order) over all *n!* vertex orderings. For
        example the star on four vertices gives ``"001011"`` and *K_4* minus an edge gives
        ``"011111"``.

        The orderings are built one position at a time. The vertices not yet placed are
        kept as a sequence of cells: those in the same cell agree on their adjacency to
        every placed vertex, and the cells are sorted by those adjacency patterns with
        non-adjacency first, which is the only order the earlier rows of a least string
        allow. The next vertex comes from the first cell, and only candidates whose row is
        least are followed. Candidates which are twins (equal neighborhoods apart from each
        other) lead to the same strings, so one of each twin class is enough.

        The search can still take exponential time, so graphs above the canonical form
        budget (see `satgraph.budgets`) raise `BudgetExceededError`.
        """
        return self._bit_string(self._canonical_order(budget))

    def canonical_graph(self, budget: Optional[int] = None) -> "Graph":
        """
        The relabeling of this graph whose upper-triangle bit string is `canonical_form`.
        """
        order = self._canonical_order(budget)
        new_label_of = [0] * self.n
        for (position, v) in enumerate(order):
            new_label_of[v] = position
        return self.relabel(new_label_of)

    def to_networkx(self) -> nx.Graph:
        ret = nx.Graph()
        ret.add_nodes_from(range(self.n))
        ret.add_edges_from(self.edges())
        return ret

    def _subset_or_all(self, within: Optional[int]) -> int:
        if within is None:
            return self.vertex_set
        return check_vertex_subset(within, self.n)

    def color_classes(self) -> List[Tuple[int, ...]]:
        """
        The color classes of color refinement started from degrees, highest degree first.
        """
        # negated so that ascending color order lists high degrees first
        colors = [-popcount(neighbors) for neighbors in self.adjacency]
        while True:
            signatures = [
                (colors[v], tuple(sorted(colors[u] for u in iter_bits(self.adjacency[v]))))
                for v in range(self.n)
            ]
            rank_of = {
                signature: rank for (rank, signature) in enumerate(sorted(set(signatures)))
            }
            refined = [rank_of[signature] for signature in signatures]
            if len(rank_of) == len(set(colors)):
                break
            colors = refined
        return [
            tuple(v for v in range(self.n) if refined[v] == color)
            for color in range(len(rank_of))
        ]

    def _canonical_order(self, budget: Optional[int]) -> Tuple[int, ...]:
        check_budget(Budget.CANONICAL_FORM, self.n, budget)
        adjacency = self.adjacency
        best: List[Tuple[str, Tuple[int, ...]]] = []

        def place(order: Tuple[int, ...], cells: Tuple[int, ...], prefix: str) -> None:
            if best:
                best_prefix = best[0][0][: len(prefix)]
                if prefix > best_prefix:
                    return
                if prefix < best_prefix:
                    best.clear()
            if not cells:
                if not best:
                    best.append((prefix, order))
                return
            (first, rest) = (cells[0], cells[1:])
            least_row: Optional[str] = None
            branches: List[Tuple[int, Tuple[int, ...]]] = []
            for v in iter_bits(first):
                if any(_are_twins(adjacency, v, u) for (u, _) in branches):
                    continue
                (row, refined) = _split_cells(adjacency[v], (first & ~(1 << v),) + rest)
                if least_row is None or row < least_row:
                    (least_row, branches) = (row, [])
                if row == least_row:
                    branches.append((v, refined))
            for (v, refined) in branches:
                place(order + (v,), refined, prefix + (least_row or ""))

        place((), (self.vertex_set,) if self.n else (), "")
        return best[0][1]

    def _bit_string(self, order: Sequence[int]) -> str:
        return "".join(
            "1" if (self.adjacency[order[i]] >> order[j]) & 1 else "0"
            for (i, j) in combinations(range(len(order)), 2)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={str_list_limited(self.edges(), 12)})"


def _are_twins(adjacency: Sequence[int], u: int, v: int) -> bool:
    """
    Whether swapping *u* and *v* is an automorphism.
    """
    return adjacency[u] & ~(1 << v) == adjacency[v] & ~(1 << u)


def _split_cells(neighbors: int, cells: Sequence[int]) -> Tuple[str, Tuple[int, ...]]:
    """
    Split each cell into its non-neighbors then its neighbors, and return the adjacency row
    this gives together with the nonempty refined cells.
    """
    row: List[str] = []
    refined: List[int] = []
    for cell in cells:
        (outside, inside) = (cell & ~neighbors, cell & neighbors)
        row.append("0" * popcount(outside) + "1" * popcount(inside))
        refined.extend(part for part in (outside, inside) if part)
    return ("".join(row), tuple(refined))


@attrs(frozen=True, slots=True)
class InducedSubgraph:
    """
    An induced subgraph together with the map back to the original vertex labels.

    Vertex *i* of *graph* is vertex *labels[i]* of the graph it was taken from.
    """

    graph: Graph = attrib(validator=validators.instance_of(Graph))
    labels: Tuple[int, ...] = attrib(converter=tuple)

    def __attrs_post_init__(self) -> None:
        check_arg(
            len(self.labels) == self.graph.n,
            "Need one original label per vertex of the induced subgraph",
        )

    def lift(self, mask: int) -> int:
        """
        Translate a vertex bitset of *graph* into the original labels.
        """
        return bitset(self.labels[i] for i in iter_bits(mask))


class GraphBuilder:
    """
    Mutable accumulator for constructing a `Graph` edge by edge.

    Re-adding an existing edge is a silent no-op, so joins and unions of edge sets can be
    composed freely.
    """

    __slots__ = ("_n", "_adjacency")

    def __init__(self, n: int) -> None:
        check_arg(
            0 <= n <= MAX_VERTICES,
            "Graphs must have between 0 and %s vertices but got %s",
            (MAX_VERTICES, n),
        )
        self._n = n
        self._adjacency = [0] * n

    @property
    def n(self) -> int:
        return self._n

    def add_edge(self, u: int, v: int) -> "GraphBuilder":
        check_vertex(u, self._n)
        check_vertex(v, self._n)
        check_arg(u != v, "Cannot add loop at vertex %s", (u,))
        self._adjacency[u] |= 1 << v
        self._adjacency[v] |= 1 << u
        return self

    def add_edges(self, edges: Iterable[Tuple[int, int]]) -> "GraphBuilder":
        for (u, v) in edges:
            self.add_edge(u, v)
        return self

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adjacency[check_vertex(u, self._n)] >> v) & 1)

    def build(self) -> Graph:
        return Graph(self._n, self._adjacency)


def new_graph(n: int) -> Graph:
    """
    The edgeless graph on *n* vertices.
    """
    return Graph.empty(n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """
    *g* plus the edge *uv*; see `Graph.with_edge`.
    """
    return g.with_edge(u, v)


@attrs(frozen=True, slots=True)
class Cut:
    """
    An edge cut: a vertex bipartition (*side*, its complement) with its crossing edges.

    *side* must be a nonempty proper subset of the *n* vertices, and every crossing edge
    must have exactly one endpoint in *side*.
    """

    n: int = attrib(validator=validators.instance_of(int))
    side: int = attrib(validator=validators.instance_of(int))
    crossing_edges: Tuple[Edge, ...] = attrib(converter=tuple)

    def __attrs_post_init__(self) -> None:
        check_vertex_subset(self.side, self.n)
        check_arg(
            0 < self.side < full(self.n),
            "A cut side must be a nonempty proper vertex subset but got %s",
            (bin(self.side),),
        )
        for (u, v) in self.crossing_edges:
            check_arg(
                ((self.side >> u) & 1) != ((self.side >> v) & 1),
                "Crossing edge %s does not cross side %s",
                ((u, v), bin(self.side)),
            )

    @staticmethod
    def of_side(g: Graph, side: int) -> "Cut":
        return Cut(g.n, side, g.crossing_edges(side))

    @property
    def size(self) -> int:
        return len(self.crossing_edges)

    @property
    def other_side(self) -> int:
        return full(self.n) & ~self.side
