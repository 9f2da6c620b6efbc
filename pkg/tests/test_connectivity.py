from unittest import TestCase

from satgraph.budgets import BudgetExceededError
from satgraph.connectivity import (
    ConnectivityKind,
    SubgraphWitness,
    contains_k_minus,
    edge_connectivity,
    global_min_edge_cut,
    has_k_connected_subgraph,
    has_k_edge_connected_subgraph,
    is_k_connected,
    is_k_edge_connected,
    minimum_vertex_cut,
    vertex_connectivity,
)
from satgraph.constructions import (
    build_complete,
    build_cycle,
    build_gkn,
    build_k_minus,
    build_path,
    build_star,
    disjoint_union,
)
from satgraph.graph import Graph

import pytest

# two triangles sharing vertex 2
BOWTIE = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
# two copies of K_4 joined by the bridge 3-4
BRIDGED_K4S = disjoint_union(build_complete(4), build_complete(4)).with_edge(3, 4)


class TestMinimumCuts(TestCase):
    def test_k_minus_cut_isolates_vertex_0(self):
        cut = global_min_edge_cut(build_k_minus(3))
        self.assertEqual(2, cut.size)
        self.assertEqual(0b0001, cut.side)
        self.assertEqual(((0, 1), (0, 2)), cut.crossing_edges)

    def test_bridge(self):
        cut = global_min_edge_cut(BRIDGED_K4S)
        self.assertEqual(((3, 4),), cut.crossing_edges)
        self.assertEqual(0b00001111, cut.side)

    def test_disconnected(self):
        cut = global_min_edge_cut(Graph.from_edges(4, [(0, 1), (2, 3)]))
        self.assertEqual(0, cut.size)
        self.assertEqual(0b0011, cut.side)

    def test_too_small(self):
        with self.assertRaises(ValueError):
            global_min_edge_cut(Graph.empty(1))

    def test_edge_connectivity(self):
        self.assertEqual(4, edge_connectivity(build_complete(5)))
        self.assertEqual(2, edge_connectivity(build_cycle(7)))
        self.assertEqual(1, edge_connectivity(build_path(4)))
        self.assertEqual(1, edge_connectivity(build_star(5)))
        self.assertEqual(2, edge_connectivity(BOWTIE))
        self.assertEqual(0, edge_connectivity(Graph.empty(3)))

    def test_vertex_connectivity(self):
        self.assertEqual(4, vertex_connectivity(build_complete(5)))
        self.assertEqual(2, vertex_connectivity(build_cycle(6)))
        self.assertEqual(1, vertex_connectivity(BOWTIE))
        self.assertEqual(0, vertex_connectivity(Graph.empty(3)))

    def test_minimum_vertex_cut(self):
        self.assertEqual(0b00100, minimum_vertex_cut(BOWTIE))
        self.assertEqual(0, minimum_vertex_cut(Graph.empty(3)))
        with self.assertRaisesRegex(ValueError, "Complete graphs"):
            minimum_vertex_cut(build_complete(3))


class TestDetectors(TestCase):
    def test_edge_detector(self):
        witness = has_k_edge_connected_subgraph(BOWTIE, 2)
        self.assertEqual(0b11111, witness.verts)
        self.assertIsNone(has_k_edge_connected_subgraph(BOWTIE, 3))
        self.assertIsNone(has_k_edge_connected_subgraph(build_path(6), 2))
        self.assertEqual(0b11, has_k_edge_connected_subgraph(build_path(2), 1).verts)

    def test_edge_detector_splits_along_small_cuts(self):
        self.assertEqual(0b00001111, has_k_edge_connected_subgraph(BRIDGED_K4S, 3).verts)
        self.assertEqual(
            0b11110000,
            has_k_edge_connected_subgraph(BRIDGED_K4S, 3, containing=1 << 5).verts,
        )
        self.assertIsNone(
            has_k_edge_connected_subgraph(BRIDGED_K4S, 3, containing=(1 << 0) | (1 << 5))
        )

    def test_vertex_detector(self):
        witness = has_k_connected_subgraph(BOWTIE, 2)
        self.assertEqual(0b00111, witness.verts)
        self.assertIs(ConnectivityKind.VERTEX, witness.kind)
        self.assertEqual(
            0b11100, has_k_connected_subgraph(BOWTIE, 2, containing=1 << 4).verts
        )
        self.assertIsNone(has_k_connected_subgraph(BOWTIE, 3))
        self.assertEqual(0b1111, has_k_connected_subgraph(build_complete(4), 3).verts)
        self.assertIsNone(has_k_connected_subgraph(build_complete(3), 3))

    def test_vertex_detector_budget(self):
        with self.assertRaisesRegex(BudgetExceededError, "limited to 4 vertices"):
            has_k_connected_subgraph(build_complete(5), 2, budget=4)

    def test_gkn_has_no_k_edge_connected_subgraph(self):
        for (k, n) in ((3, 9), (3, 13), (4, 12), (5, 20)):
            (g, _) = build_gkn(k, n)
            self.assertIsNone(has_k_edge_connected_subgraph(g, k))
            self.assertEqual(k - 1, edge_connectivity(g))


class TestKMinusContainment(TestCase):
    def test_contains(self):
        self.assertEqual(0b1111, contains_k_minus(build_k_minus(3), 3))
        self.assertEqual(0b111, contains_k_minus(build_cycle(5), 2))
        (g, _) = build_gkn(3, 9)
        self.assertEqual(0b1111, contains_k_minus(g, 3))

    def test_absent(self):
        self.assertIsNone(contains_k_minus(build_cycle(6), 3))
        self.assertIsNone(contains_k_minus(build_complete(3), 3))
        with self.assertRaises(ValueError):
            contains_k_minus(build_complete(3), 1)


class TestWitness(TestCase):
    def test_json(self):
        witness = SubgraphWitness(0b1011, ConnectivityKind.EDGE, 2)
        self.assertEqual((0, 1, 3), witness.vertices())
        self.assertEqual(
            {"vertices": [0, 1, 3], "kind": "edge-connected", "level": 2}, witness.to_json()
        )

    def test_validation(self):
        with self.assertRaises(ValueError):
            SubgraphWitness(0, ConnectivityKind.EDGE, 2)
        with self.assertRaises(ValueError):
            SubgraphWitness(0b11, ConnectivityKind.EDGE, 0)


@pytest.mark.parametrize(
    "g,k,edge_expected,vertex_expected",
    [
        (build_complete(4), 3, True, True),
        (build_complete(4), 4, False, False),
        (build_complete(2), 1, True, True),
        (Graph.empty(1), 1, False, False),
        (BOWTIE, 2, True, False),
        (build_cycle(5), 2, True, True),
    ],
)
def test_connectivity_predicates(g, k, edge_expected, vertex_expected):
    assert is_k_edge_connected(g, k) == edge_expected
    assert is_k_connected(g, k) == vertex_expected
