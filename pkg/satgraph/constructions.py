"""
Builders for the graph families of saturation problems for k-edge-connectivity and
k-connectivity, together with the closed-form edge counts they realize.

* `build_k_minus`: the complete graph on *k+1* vertices minus one edge.
* `build_complete_split`: a clique on *k-1* vertices completely joined to an independent
  set. It is a *(k-1)*-tree and attains the saturation number for k-connectivity.
* `build_gkn`: a ladder of *t* copies of `build_k_minus(k)` with *r* tail vertices. It has
  `rho(k, n)` edges, the saturation number for k-edge-connectivity.
* `build_k_tree`: *q*-trees, grown one vertex at a time onto existing *q*-cliques.

Vertex numbering is fixed so that edge lists are reproducible: vertex *j* (0-indexed) of
block *i* (0-indexed) of `build_gkn` is ``i * (k + 1) + j`` and tail vertex *j* is
``t * (k + 1) + j``.
"""
import random
from itertools import combinations
from math import comb
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

from attr import attrib, attrs, validators

from satgraph.bitsets import bitset
from satgraph.graph import Cut, Graph, GraphBuilder
from satgraph.preconditions import check_arg, check_state


def rho(k: int, n: int) -> int:
    """
    The saturation number for k-edge-connectivity on *n* vertices:
    ``(k-1)(n-1) - floor(n/(k+1)) * C(k-1, 2)``.
    """
    check_arg(k >= 1, "k must be at least 1 but got %s", (k,))
    check_arg(n >= 1, "n must be at least 1 but got %s", (n,))
    return (k - 1) * (n - 1) - (n // (k + 1)) * comb(k - 1, 2)


def ex_formula(k: int, n: int) -> int:
    """
    ``(k-1)n - C(k, 2)``.

    This is both the extremal number for k-edge-connectivity saturation (when
    ``n >= k + 1``) and the saturation number for k-connectivity (when ``n >= k``). It is
    also the edge count of every *(k-1)*-tree on *n* vertices.
    """
    check_arg(k >= 1, "k must be at least 1 but got %s", (k,))
    check_arg(n >= 1, "n must be at least 1 but got %s", (n,))
    return (k - 1) * n - comb(k, 2)


def build_complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def build_path(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def build_cycle(n: int) -> Graph:
    check_arg(n >= 3, "A cycle needs at least 3 vertices but got %s", (n,))
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def build_star(n: int) -> Graph:
    """
    The star on *n* vertices, centered at vertex 0.
    """
    check_arg(n >= 1, "A star needs at least 1 vertex but got %s", (n,))
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """
    *g* followed by a copy of *h* whose vertices are shifted up by ``g.n``.
    """
    builder = GraphBuilder(g.n + h.n)
    builder.add_edges(g.edges())
    builder.add_edges((u + g.n, v + g.n) for (u, v) in h.edges())
    return builder.build()


def build_k_minus(k: int) -> Graph:
    """
    The complete graph on *k+1* vertices with the edge ``{0, k}`` deleted.
    """
    check_arg(k >= 2, "k must be at least 2 but got %s", (k,))
    return Graph.from_edges(
        k + 1, (pair for pair in combinations(range(k + 1), 2) if pair != (0, k))
    )


def build_complete_split(n: int, k: int) -> Graph:
    """
    The clique on vertices ``0..k-2`` completely joined to the independent set
    ``k-1..n-1``.
    """
    check_arg(k >= 1, "k must be at least 1 but got %s", (k,))
    check_arg(n >= k, "Need n >= k for a complete split graph but got n=%s, k=%s", (n, k))
    builder = GraphBuilder(n)
    builder.add_edges(combinations(range(k - 1), 2))
    builder.add_edges((u, v) for u in range(k - 1) for v in range(k - 1, n))
    return builder.build()


def _validate_layout_blocks(layout: "GknLayout", _attr, blocks) -> None:
    check_arg(
        len(blocks) == layout.t and all(len(block) == layout.k + 1 for block in blocks),
        "Expected %s blocks of %s vertices",
        (layout.t, layout.k + 1),
    )


@attrs(frozen=True, slots=True)
class GknLayout:
    """
    Which vertices of a `build_gkn` graph form each *K_{k+1}^-* block and the tail.

    *blocks[i][j]* is vertex *j* of block *i*; positions 0 and *k* of a block are its two
    non-adjacent vertices. *tail* lists the *r* extra vertices, each adjacent to the
    middle positions ``1..k-1`` of the last block.
    """

    k: int = attrib(validator=validators.instance_of(int))
    n: int = attrib(validator=validators.instance_of(int))
    t: int = attrib(validator=validators.instance_of(int))
    r: int = attrib(validator=validators.instance_of(int))
    blocks: Tuple[Tuple[int, ...], ...] = attrib(
        converter=lambda blocks: tuple(tuple(block) for block in blocks),
        validator=_validate_layout_blocks,
    )
    tail: Tuple[int, ...] = attrib(converter=tuple)

    def __attrs_post_init__(self) -> None:
        check_arg(
            self.n == self.t * (self.k + 1) + self.r and 0 <= self.r <= self.k,
            "Inconsistent layout: n=%s, t=%s, r=%s for k=%s",
            (self.n, self.t, self.r, self.k),
        )
        everything = [v for block in self.blocks for v in block] + list(self.tail)
        check_arg(
            sorted(everything) == list(range(self.n)),
            "Blocks and tail must partition the vertices 0..%s",
            (self.n - 1,),
        )

    def ladder_positions(self) -> Tuple[int, ...]:
        """
        The block positions joined between consecutive blocks: all but 1 and *k-1*.
        """
        return tuple(j for j in range(self.k + 1) if j not in (1, self.k - 1))

    def block_set(self, i: int) -> int:
        check_arg(0 <= i < self.t, "Block index %s out of range 0..%s", (i, self.t - 1))
        return bitset(self.blocks[i])

    def cut_between_blocks(self, i: int) -> Cut:
        """
        The cut separating blocks ``0..i-1`` from the rest of the graph, for ``1 <= i < t``.

        Its crossing edges are exactly the ladder edges between blocks *i-1* and *i*.
        """
        check_arg(1 <= i < self.t, "Cut index %s out of range 1..%s", (i, self.t - 1))
        side = 0
        for j in range(i):
            side |= self.block_set(j)
        return Cut(
            self.n,
            side,
            sorted(
                (self.blocks[i - 1][j], self.blocks[i][j]) for j in self.ladder_positions()
            ),
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "n": self.n,
            "t": self.t,
            "r": self.r,
            "blocks": [list(block) for block in self.blocks],
            "tail": list(self.tail),
        }


def build_gkn(k: int, n: int) -> Tuple[Graph, GknLayout]:
    """
    The ladder-of-blocks graph on *n* vertices with `rho(k, n)` edges.

    Take ``t = n // (k+1)`` disjoint copies of `build_k_minus(k)`, join vertex *j* of each
    block to vertex *j* of the next for every position *j* other than 1 and *k-1*, and add
    ``r = n - t(k+1)`` tail vertices adjacent to the *k-1* middle vertices of the last block.
    """
    check_arg(k >= 3, "k must be at least 3 but got %s", (k,))
    check_arg(n >= k + 1, "n must be at least k+1=%s but got %s", (k + 1, n))
    t = n // (k + 1)
    r = n - t * (k + 1)
    layout = GknLayout(
        k=k,
        n=n,
        t=t,
        r=r,
        blocks=[[i * (k + 1) + j for j in range(k + 1)] for i in range(t)],
        tail=[t * (k + 1) + j for j in range(r)],
    )

    builder = GraphBuilder(n)
    for block in layout.blocks:
        builder.add_edges(
            (block[a], block[b])
            for (a, b) in combinations(range(k + 1), 2)
            if (a, b) != (0, k)
        )
    for (block, next_block) in zip(layout.blocks, layout.blocks[1:]):
        builder.add_edges((block[j], next_block[j]) for j in layout.ladder_positions())
    last_block = layout.blocks[-1]
    for w in layout.tail:
        builder.add_edges((w, last_block[j]) for j in range(1, k))

    ret = builder.build()
    for block in layout.blocks:
        check_state(
            not ret.has_edge(block[0], block[k]),
            "Block %s must miss the edge between its end vertices",
            (block,),
        )
    check_state(
        ret.m == rho(k, n),
        "Built %s edges but expected %s for k=%s, n=%s",
        (ret.m, rho(k, n), k, n),
    )
    return (ret, layout)


def build_k_tree(
    q: int,
    n: int,
    attach: Optional[Sequence[Iterable[int]]] = None,
    *,
    seed: Optional[int] = None,
) -> Graph:
    """
    A *q*-tree on *n* vertices.

    Vertices ``0..q-1`` form the starting clique. Each later vertex *v* is joined to a
    *q*-clique of vertices before it. With *attach*, ``attach[v - q]`` names that clique.
    Otherwise the clique is drawn by a `random.Random` seeded with *seed* (0 if absent)
    from a list of the graph's *q*-cliques, maintained as follows so the result is
    reproducible across implementations:

    * the list starts as ``[(0, ..., q-1)]``;
    * vertex *v* joins ``cliques[rng.randrange(len(cliques))]``;
    * then, for each member *x* of the chosen clique in ascending order, the clique with *x*
      replaced by *v* (sorted ascending) is appended.

    The result always has ``q*n - C(q+1, 2)`` edges.
    """
    check_arg(q >= 1, "q must be at least 1 but got %s", (q,))
    check_arg(n >= q, "n must be at least q=%s but got %s", (q, n))
    check_arg(
        attach is None or seed is None, "Specify at most one of an attachment list and a seed"
    )

    builder = GraphBuilder(n)
    builder.add_edges(combinations(range(q), 2))

    if attach is not None:
        attach = [tuple(clique) for clique in attach]
        check_arg(
            len(attach) == n - q,
            "Need one attachment clique per vertex after the first %s, i.e. %s, but got %s",
            (q, n - q, len(attach)),
        )
        for (v, clique) in enumerate(attach, start=q):
            check_arg(
                len(set(clique)) == q,
                "Vertex %s must attach to %s distinct vertices but got %s",
                (v, q, clique),
            )
            check_arg(
                all(0 <= x < v for x in clique),
                "Vertex %s may only attach to earlier vertices but got %s",
                (v, clique),
            )
            check_arg(
                all(builder.has_edge(x, y) for (x, y) in combinations(clique, 2)),
                "Attachment %s of vertex %s is not a clique",
                (clique, v),
            )
            builder.add_edges((x, v) for x in clique)
    else:
        rng = random.Random(0 if seed is None else seed)
        cliques = [tuple(range(q))]
        for v in range(q, n):
            chosen = cliques[rng.randrange(len(cliques))]
            builder.add_edges((x, v) for x in chosen)
            for x in chosen:
                cliques.append(tuple(sorted([y for y in chosen if y != x] + [v])))

    ret = builder.build()
    check_state(
        ret.m == q * n - comb(q + 1, 2),
        "A %s-tree on %s vertices must have %s edges but got %s",
        (q, n, q * n - comb(q + 1, 2), ret.m),
    )
    return ret


def split_attachments(n: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    """
    The `build_k_tree` attachment list that always picks the starting clique.

    With ``q = k-1`` this reproduces `build_complete_split(n, k)` exactly.
    """
    check_arg(k >= 2, "k must be at least 2 but got %s", (k,))
    check_arg(n >= k - 1, "n must be at least k-1 but got %s", (n,))
    return tuple(tuple(range(k - 1)) for _ in range(n - k + 1))
