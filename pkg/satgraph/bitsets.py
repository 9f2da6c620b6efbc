"""
Vertex sets as integer bitsets.

Bit *i* of a bitset is set iff vertex *i* is a member. Graphs at the scale this package
works at have at most a few dozen vertices, so a single Python ``int`` holds any vertex set
and set algebra is plain bitwise arithmetic.

The functions taking an *adjacency* sequence operate on the raw per-vertex neighbor
bitsets of a graph so that hot loops (exhaustive search) can use them without building
`Graph` objects.
"""
from typing import Iterable, Iterator, List, Sequence, Tuple

from satgraph.preconditions import check_arg


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """
    The members of *mask* in ascending order.
    """
    check_arg(mask >= 0, "Bitsets must be non-negative but got %s", (mask,))
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_tuple(mask: int) -> Tuple[int, ...]:
    return tuple(iter_bits(mask))


def bitset(vertices: Iterable[int]) -> int:
    """
    The bitset whose members are *vertices*.
    """
    ret = 0
    for v in vertices:
        check_arg(v >= 0, "Vertex labels must be non-negative but got %s", (v,))
        ret |= 1 << v
    return ret


def full(n: int) -> int:
    """
    The bitset of all vertices of a graph on *n* vertices.
    """
    return (1 << n) - 1


def lowest(mask: int) -> int:
    check_arg(mask > 0, "The empty set has no lowest member")
    return (mask & -mask).bit_length() - 1


def k_core(adjacency: Sequence[int], k: int, within: int) -> int:
    """
    The vertices of *within* surviving repeated deletion of vertices of degree below *k*.

    Degrees are counted inside the surviving set. Every subgraph of minimum degree at least
    *k* lies inside this set, which is what makes it an exact pre-filter for k-edge-connected
    and k-connected subgraphs.
    """
    core = within
    changed = True
    while changed:
        changed = False
        for v in iter_bits(core):
            if popcount(adjacency[v] & core) < k:
                core &= ~(1 << v)
                changed = True
    return core


def component_of(adjacency: Sequence[int], start: int, within: int) -> int:
    """
    The vertices of *within* reachable from *start* using only vertices of *within*.
    """
    reached = 1 << start
    frontier = reached
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= adjacency[v]
        frontier = grown & within & ~reached
        reached |= frontier
    return reached


def components(adjacency: Sequence[int], within: int) -> List[int]:
    """
    The connected components of the subgraph induced by *within*, ordered by least member.
    """
    ret = []
    remaining = within
    while remaining:
        component = component_of(adjacency, lowest(remaining), remaining)
        ret.append(component)
        remaining &= ~component
    return ret
