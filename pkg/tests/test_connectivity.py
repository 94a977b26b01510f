from itertools import combinations

import pytest

from edge_expand import (
    VertexSet,
    brute_force_edge_connectivity,
    edge_connectivity,
    edge_cut,
    enumerate_cuts,
    global_min_cut,
    local_edge_connectivity,
    new_graph,
    random_graph,
)
from edge_expand.errors import SameVertex, TooLarge, TooSmall

from conftest import complete_graph, cycle_graph, path_graph, star_graph


def two_k4_bridge():
    """Two K4 blocks joined by a single edge 3-4."""
    edges = list(combinations(range(4), 2)) + list(combinations(range(4, 8), 2))
    edges.append((3, 4))
    return new_graph(8, edges)


def paths_are_edge_disjoint(g, result, u, v):
    used = set()
    for path in result.paths:
        assert path[0] == u and path[-1] == v
        for a, b in zip(path, path[1:]):
            assert g.has_edge(a, b)
            e = (min(a, b), max(a, b))
            assert e not in used
            used.add(e)


class TestLocalEdgeConnectivity:
    def test_complete(self):
        g = complete_graph(4)
        r = local_edge_connectivity(g, 0, 1)
        assert r.value == 3
        paths_are_edge_disjoint(g, r, 0, 1)

    def test_two_triangles_sharing_a_vertex(self):
        # shared vertex, not a shared edge: two edge-disjoint paths exist
        g = new_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        r = local_edge_connectivity(g, 0, 3)
        assert r.value == 2
        paths_are_edge_disjoint(g, r, 0, 3)

    def test_disconnected(self):
        g = new_graph(4, [(0, 1), (2, 3)])
        r = local_edge_connectivity(g, 0, 3)
        assert r.value == 0 and r.paths == ()

    def test_same_vertex(self):
        with pytest.raises(SameVertex):
            local_edge_connectivity(complete_graph(3), 1, 1)


class TestEdgeConnectivity:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_complete(self, n):
        assert edge_connectivity(complete_graph(n)).kprime == n - 1

    @pytest.mark.parametrize("n", range(3, 11))
    def test_cycle(self, n):
        assert edge_connectivity(cycle_graph(n)).kprime == 2

    def test_bridge(self):
        r = edge_connectivity(two_k4_bridge())
        assert r.kprime == 1
        assert r.witness.crossing_edges == frozenset({(3, 4)})

    def test_disconnected(self):
        g = new_graph(4, [(0, 1), (2, 3)])
        r = edge_connectivity(g)
        assert r.kprime == 0 and r.witness.size == 0

    def test_too_small(self):
        with pytest.raises(TooSmall):
            edge_connectivity(new_graph(1, []))

    def test_witness_revalidates(self):
        for seed in range(30):
            g = random_graph(8, 0.5, seed)
            r = edge_connectivity(g)
            again = edge_cut(g, r.witness.s_side)
            assert again.crossing_edges == r.witness.crossing_edges
            assert again.size == r.kprime


class TestGlobalMinCut:
    def test_k5(self):
        cut = global_min_cut(complete_graph(5))
        assert cut.size == 4

    def test_path_bridge(self):
        assert global_min_cut(path_graph(4)).size == 1

    def test_agrees_with_flow(self):
        for seed in range(100):
            g = random_graph(2 + seed % 8, [0.2, 0.5, 0.8][seed % 3], seed)
            assert global_min_cut(g).size == edge_connectivity(g).kprime


class TestEnumerateCuts:
    def test_count_n3(self):
        assert sum(1 for _ in enumerate_cuts(complete_graph(3))) == 3

    def test_count_n4(self):
        assert sum(1 for _ in enumerate_cuts(path_graph(4))) == 7

    def test_constraint_pins_single_cut(self):
        g = complete_graph(4)
        cuts = list(enumerate_cuts(g, constraint=VertexSet.of(4, {0, 1, 2})))
        assert len(cuts) == 1
        assert cuts[0].s_side.members == frozenset({0, 1, 2})

    def test_constraint_containment(self):
        g = random_graph(6, 0.5, seed=2)
        forced = VertexSet.of(6, {1, 4})
        cuts = list(enumerate_cuts(g, constraint=forced))
        assert len(cuts) == 2 ** 4 - 1
        assert all(forced.members <= c.s_side.members for c in cuts)

    def test_cap(self):
        with pytest.raises(TooLarge):
            list(enumerate_cuts(complete_graph(5), max_n=4))


class TestBruteForce:
    def test_k4(self):
        assert brute_force_edge_connectivity(complete_graph(4)).kprime == 3

    def test_star(self):
        r = brute_force_edge_connectivity(star_graph(5))
        assert r.kprime == 1

    def test_deterministic_witness(self):
        g = cycle_graph(6)
        a = brute_force_edge_connectivity(g)
        b = brute_force_edge_connectivity(g)
        assert a.witness.s_side.members == b.witness.s_side.members

    def test_matches_enumeration(self):
        for seed in range(40):
            g = random_graph(7, 0.5, seed)
            expected = min(c.size for c in enumerate_cuts(g))
            assert brute_force_edge_connectivity(g).kprime == expected


def test_menger_consistency_small():
    for seed in range(60):
        g = random_graph(2 + seed % 6, 0.6, seed)
        if edge_connectivity(g).kprime == 0:
            continue
        lam = min(
            local_edge_connectivity(g, u, v).value
            for u, v in combinations(range(g.n), 2)
        )
        assert lam == edge_connectivity(g).kprime


def test_kprime_bounded_by_min_degree():
    for seed in range(60):
        g = random_graph(2 + seed % 7, 0.5, seed)
        r = edge_connectivity(g)
        assert r.kprime <= min(len(g.adjacency[v]) for v in range(g.n))
