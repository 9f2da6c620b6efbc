"""Guava-like checks, extended with the vertex checks every graph operation needs."""
from typing import Any, Tuple, TypeVar, Union

# pylint: disable=invalid-name
_ClassInfo = Union[type, Tuple[Union[type, Tuple], ...]]

T = TypeVar("T")


def check_not_none(x: T, msg: str = None) -> T:
    """
    Raise a `ValueError` if the given argument is None.

    This returns its input so you can do::
        self.x = check_not_none(x)
    """
    if x is None:
        raise ValueError(msg) if msg else ValueError()
    return x


def check_arg(result: Any, msg: str = None, msg_args: Tuple = None) -> None:
    """
    Raise a `ValueError` if *result* is falsy.

    *msg* may contain %-style placeholders which are filled from *msg_args*
    only when the check fails.
    """
    if not result:
        if msg:
            raise ValueError(msg % (msg_args or ()))
        raise ValueError()


def check_state(result: Any, msg: str = None, msg_args: Tuple = None) -> None:
    """
    Raise an `AssertionError` if *result* is falsy.

    Use this for internal invariants rather than for caller mistakes.
    """
    if not result:
        if msg:
            raise AssertionError(msg % (msg_args or ()))
        raise AssertionError()


def check_isinstance(item: T, classinfo: _ClassInfo) -> T:
    if not isinstance(item, classinfo):
        raise TypeError(
            "Expected instance of type {!r} but got type {!r} for {!r}".format(
                classinfo, type(item), item
            )
        )
    return item


def check_vertex(v: int, n: int) -> int:
    """
    Check *v* is a vertex label of a graph on *n* vertices, i.e. ``0 <= v < n``.

    Returns *v* so it can be used inline.
    """
    if not isinstance(v, int) or isinstance(v, bool):
        raise TypeError(f"Vertex labels must be integers but got {v!r}")
    if not 0 <= v < n:
        raise ValueError(f"Vertex {v} is out of range for a graph on {n} vertices")
    return v


def check_vertex_subset(mask: int, n: int) -> int:
    """
    Check the bitset *mask* only names vertices of a graph on *n* vertices.
    """
    if mask < 0 or mask >> n:
        raise ValueError(
            f"Vertex set {bin(mask)} names vertices outside a graph on {n} vertices"
        )
    return mask
