"""The compiled kernels and the pure-Python twin must agree exactly."""

import pytest

from edge_expand import VertexSet, edge_cut, random_graph
from edge_expand._kernels import _pure

try:
    from edge_expand._kernels import _ccore
except ImportError:
    _ccore = None

needs_ccore = pytest.mark.skipif(_ccore is None, reason="compiled kernel not built")

IMPLS = [_pure] if _ccore is None else [_pure, _ccore]


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.IMPLEMENTATION)
def test_cut_size_against_edge_cut(impl):
    for seed in range(50):
        n = 2 + seed % 8
        g = random_graph(n, 0.5, seed)
        adj = g.adjacency_masks()
        for mask in range(1, (1 << n) - 1):
            expected = edge_cut(g, VertexSet.from_mask(n, mask)).size
            assert impl.cut_size(adj, mask) == expected


@needs_ccore
def test_min_cut_impls_agree():
    for seed in range(200):
        n = 2 + seed % 9
        g = random_graph(n, [0.2, 0.5, 0.8][seed % 3], seed)
        adj = g.adjacency_masks()
        assert _pure.min_cut(adj, n) == _ccore.min_cut(adj, n)


@needs_ccore
def test_cuts_below_impls_agree():
    for seed in range(200):
        n = 3 + seed % 7
        g = random_graph(n, 0.5, seed)
        adj = g.adjacency_masks()
        forced = 1 << (seed % n)
        for bound in (1, 2, 3, n):
            assert _pure.cuts_below(adj, n, forced, bound) == _ccore.cuts_below(
                adj, n, forced, bound
            )


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.IMPLEMENTATION)
def test_cuts_below_semantics(impl):
    g = random_graph(6, 0.5, seed=11)
    adj = g.adjacency_masks()
    forced = 0b000011
    bound = 4
    got = impl.cuts_below(adj, 6, forced, bound)
    expected = []
    for mask in range(1 << 6):
        if mask & forced != forced or mask == (1 << 6) - 1:
            continue
        if edge_cut(g, VertexSet.from_mask(6, mask)).size < bound:
            expected.append(mask)
    assert got == sorted(expected)
