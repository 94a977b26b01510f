import math

import pytest
from hypothesis import given, strategies as st

from edge_expand import (
    VertexSet,
    bracket,
    degree,
    distance,
    distance_to_set,
    edge_cut,
    induced_subgraph,
    neighborhood,
    new_graph,
    random_graph,
)
from edge_expand.errors import (
    DuplicateEdge,
    EmptySet,
    EmptySide,
    LoopEdge,
    VertexOutOfRange,
)

from conftest import complete_graph, cycle_graph, path_graph, star_graph

INF = math.inf


class TestNewGraph:
    def test_path(self):
        g = new_graph(3, [(0, 1), (1, 2)])
        assert g.n == 3
        assert g.edges == frozenset({(0, 1), (1, 2)})
        assert g.adjacency[1] == frozenset({0, 2})

    def test_loop_rejected(self):
        with pytest.raises(LoopEdge):
            new_graph(2, [(0, 0)])

    def test_duplicate_rejected_either_order(self):
        with pytest.raises(DuplicateEdge):
            new_graph(3, [(0, 1), (1, 0)])

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            new_graph(2, [(0, 2)])


class TestDegreeNeighborhood:
    def test_complete(self):
        g = complete_graph(4)
        assert all(degree(g, v) == 3 for v in range(4))
        assert neighborhood(g, 0).members == frozenset({1, 2, 3})

    def test_path_endpoint(self):
        assert degree(path_graph(3), 0) == 1

    def test_isolated(self):
        g = new_graph(3, [(0, 1)])
        assert degree(g, 2) == 0
        assert neighborhood(g, 2).members == frozenset()

    def test_path_middle_neighborhood(self):
        assert neighborhood(path_graph(3), 1).members == frozenset({0, 2})

    def test_range_check(self):
        with pytest.raises(VertexOutOfRange):
            degree(path_graph(3), 5)


class TestBracket:
    def test_path(self):
        g = path_graph(3)
        a = VertexSet.of(3, {0})
        b = VertexSet.of(3, {1, 2})
        assert bracket(g, a, b) == frozenset({(0, 1)})

    def test_empty_side(self):
        g = complete_graph(4)
        assert bracket(g, VertexSet.of(4, set()), VertexSet.full(4)) == frozenset()

    def test_k4_split(self):
        # all 2x2 endpoint combinations qualify
        g = complete_graph(4)
        got = bracket(g, VertexSet.of(4, {0, 1}), VertexSet.of(4, {2, 3}))
        assert got == frozenset({(0, 2), (0, 3), (1, 2), (1, 3)})

    def test_symmetry_and_subset(self):
        g = random_graph(7, 0.5, seed=3)
        a = VertexSet.of(7, {0, 2, 4})
        b = VertexSet.of(7, {1, 2, 5})
        assert bracket(g, a, b) == bracket(g, b, a)
        assert bracket(g, a, b) <= g.edges
        assert bracket(g, VertexSet.full(7), VertexSet.full(7)) == g.edges


class TestInducedSubgraph:
    def test_k4_minus_vertex(self):
        g, id_map = induced_subgraph(complete_graph(4), VertexSet.of(4, {0, 1, 2}))
        assert g.n == 3 and g.m == 3
        assert id_map == (0, 1, 2)

    def test_disconnecting(self):
        g, _ = induced_subgraph(path_graph(3), VertexSet.of(3, {0, 2}))
        assert g.m == 0

    def test_cycle_arc(self):
        # three consecutive cycle vertices induce a path
        g, id_map = induced_subgraph(cycle_graph(5), VertexSet.of(5, {1, 2, 3}))
        assert g.edges == frozenset({(0, 1), (1, 2)})
        assert id_map == (1, 2, 3)

    def test_full_set_identity(self):
        g = random_graph(6, 0.5, seed=1)
        h, id_map = induced_subgraph(g, VertexSet.full(6))
        assert h.edges == g.edges
        assert id_map == tuple(range(6))

    def test_empty_rejected(self):
        with pytest.raises(EmptySet):
            induced_subgraph(path_graph(3), VertexSet.of(3, set()))


class TestDistance:
    def test_self(self):
        assert distance(path_graph(3), 1, 1) == 0

    def test_path_ends(self):
        assert distance(path_graph(3), 0, 2) == 2

    def test_disconnected(self):
        g = new_graph(4, [(0, 1), (2, 3)])
        assert distance(g, 0, 3) == INF

    def test_to_set_member(self):
        assert distance_to_set(path_graph(3), 0, VertexSet.of(3, {0, 2})) == 0

    def test_to_set_path(self):
        assert distance_to_set(path_graph(3), 0, VertexSet.of(3, {2})) == 2

    def test_to_set_star(self):
        # star with center 0: leaf to other leaves is 2
        g = star_graph(3)
        assert distance_to_set(g, 3, VertexSet.of(4, {1, 2})) == 2

    def test_to_empty_set(self):
        with pytest.raises(EmptySet):
            distance_to_set(path_graph(3), 0, VertexSet.of(3, set()))


class TestEdgeCut:
    def test_k4_singleton(self):
        cut = edge_cut(complete_graph(4), VertexSet.of(4, {0}))
        assert cut.size == 3

    def test_cycle_arc(self):
        cut = edge_cut(cycle_graph(6), VertexSet.of(6, {0, 1, 2}))
        assert cut.size == 2
        assert cut.crossing_edges == frozenset({(2, 3), (0, 5)})

    def test_empty_sides(self):
        with pytest.raises(EmptySide):
            edge_cut(path_graph(3), VertexSet.of(3, set()))
        with pytest.raises(EmptySide):
            edge_cut(path_graph(3), VertexSet.full(3))


@given(st.integers(2, 9), st.sampled_from([0.2, 0.5, 0.8]), st.integers(0, 10_000))
def test_degree_sum_is_twice_edges(n, p, seed):
    g = random_graph(n, p, seed)
    assert sum(degree(g, v) for v in range(n)) == 2 * g.m


@given(st.integers(2, 8), st.integers(0, 10_000), st.data())
def test_cut_complement_symmetry(n, seed, data):
    g = random_graph(n, 0.5, seed)
    members = data.draw(
        st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1)
    )
    s = VertexSet.of(n, members)
    assert edge_cut(g, s).size == edge_cut(g, s.complement()).size


@given(st.integers(2, 9), st.integers(0, 2_000))
def test_distance_triangle_inequality(n, seed):
    g = random_graph(n, 0.5, seed)
    dist = [[distance(g, u, v) for v in range(n)] for u in range(n)]
    for u in range(n):
        for v in range(n):
            for w in range(n):
                assert dist[u][w] <= dist[u][v] + dist[v][w]
