from unittest import TestCase

from satgraph.preconditions import (
    check_arg,
    check_isinstance,
    check_not_none,
    check_state,
    check_vertex,
    check_vertex_subset,
)

import pytest


class TestPreconditions(TestCase):
    def test_check_arg_interpolation(self):
        with self.assertRaisesRegex(ValueError, "Expected k to be at least 2 but got 1"):
            k = 1
            check_arg(k >= 2, "Expected k to be at least %s but got %s", (2, k))

    def test_check_state_raises_assertion_error(self):
        with self.assertRaisesRegex(AssertionError, "Built 4 edges but expected 5"):
            check_state(False, "Built %s edges but expected %s", (4, 5))
        check_state(True, "never formatted %s")

    def test_not_none(self):
        with self.assertRaises(ValueError):
            check_not_none(None)
        with self.assertRaisesRegex(ValueError, "foo"):
            check_not_none(None, "foo")
        self.assertEqual(0, check_not_none(0))

    def test_check_isinstance(self):
        self.assertEqual(3, check_isinstance(3, int))
        with self.assertRaises(TypeError):
            check_isinstance("3", int)


@pytest.mark.parametrize("v", [0, 3, 6])
def test_check_vertex_in_range(v):
    assert check_vertex(v, 7) == v


@pytest.mark.parametrize("v", [-1, 7, 100])
def test_check_vertex_out_of_range(v):
    with pytest.raises(ValueError, match="out of range"):
        check_vertex(v, 7)


@pytest.mark.parametrize("v", [True, 1.0, "1"])
def test_check_vertex_rejects_non_integers(v):
    with pytest.raises(TypeError):
        check_vertex(v, 7)


def test_check_vertex_subset():
    assert check_vertex_subset(0b101, 3) == 0b101
    with pytest.raises(ValueError, match="outside a graph on 3 vertices"):
        check_vertex_subset(0b1000, 3)
    with pytest.raises(ValueError):
        check_vertex_subset(-1, 3)
