"""Exact edge connectivity: flow-based, contraction-based, and brute force.

Three independent routes to the same number:

* ``edge_connectivity``   -- fixed-source max-flow scan (Menger),
* ``global_min_cut``      -- deterministic Stoer-Wagner on unit weights,
* ``brute_force_edge_connectivity`` -- cut enumeration, small graphs only.

The brute-force route is the oracle the other two are validated against.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from . import _kernels
from .errors import EmptySide, SameVertex, TooLarge, TooSmall
from .graph import (
    Cut,
    Graph,
    VertexSet,
    _check_vertex,
    connected_component,
    edge_cut,
    is_connected,
)

DEFAULT_ENUM_CAP = 16
ENUM_CAP_ENV = "EDGE_EXPAND_MAX_ENUM_N"


def enumeration_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class FlowResult:
    """Maximum edge-disjoint path count between two vertices, with paths."""

    value: int
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ConnectivityResult:
    kprime: int
    witness: Cut


def _max_flow(g: Graph, s: int, t: int) -> tuple[int, list[dict[int, int]]]:
    """Unit-capacity max flow; returns (value, residual capacities).

    Each undirected edge becomes two opposed arcs of capacity 1; residual
    bookkeeping guarantees net flow crosses an edge in one direction only.
    """
    cap: list[dict[int, int]] = [{} for _ in range(g.n)]
    for u, v in g.edges:
        cap[u][v] = 1
        cap[v][u] = 1
    value = 0
    while True:
        parent: dict[int, int] = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            return value, cap
        y = t
        while y != s:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        value += 1


def _residual_reachable(g: Graph, cap: list[dict[int, int]], s: int) -> frozenset[int]:
    seen = {s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y, c in cap[x].items():
            if c > 0 and y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def _decompose_paths(
    g: Graph, cap: list[dict[int, int]], s: int, t: int, value: int
) -> tuple[tuple[int, ...], ...]:
    """Extract ``value`` edge-disjoint s-t paths from the net flow."""
    out: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        net = 1 - cap[u][v]  # f(u,v) - f(v,u)
        if net > 0:
            out[u].add(v)
        elif net < 0:
            out[v].add(u)
    paths = []
    for _ in range(value):
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for y in out[x]:
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        path = [t]
        while path[-1] != s:
            path.append(parent[path[-1]])
        path.reverse()
        for x, y in zip(path, path[1:]):
            out[x].remove(y)
        paths.append(tuple(path))
    return tuple(paths)


def local_edge_connectivity(g: Graph, u: int, v: int) -> FlowResult:
    """Maximum number of pairwise edge-disjoint u-v paths (Menger)."""
    if u == v:
        raise SameVertex(f"local edge connectivity needs two distinct vertices, got {u}")
    _check_vertex(g, u)
    _check_vertex(g, v)
    value, cap = _max_flow(g, u, v)
    return FlowResult(value, _decompose_paths(g, cap, u, v, value))


def edge_connectivity(g: Graph) -> ConnectivityResult:
    """k'(G) via a fixed-source flow scan, with a witness cut.

    Any minimum cut separates vertex 0 from some other vertex, so scanning
    targets from the single source 0 suffices.
    """
    if g.n < 2:
        raise TooSmall("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        return ConnectivityResult(0, edge_cut(g, connected_component(g, 0)))
    best_value: int | None = None
    best_cap: list[dict[int, int]] | None = None
    for t in range(1, g.n):
        value, cap = _max_flow(g, 0, t)
        if best_value is None or value < best_value:
            best_value, best_cap = value, cap
    assert best_value is not None and best_cap is not None
    witness = edge_cut(g, VertexSet(g.n, _residual_reachable(g, best_cap, 0)))
    assert witness.size == best_value
    return ConnectivityResult(best_value, witness)


def global_min_cut(g: Graph) -> Cut:
    """Deterministic Stoer-Wagner minimum cut on unit edge weights."""
    if g.n < 2:
        raise TooSmall("global min cut needs at least 2 vertices")
    n = g.n
    w = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        w[u][v] = 1
        w[v][u] = 1
    groups: list[list[int]] = [[v] for v in range(n)]
    active = list(range(n))
    best_size: int | None = None
    best_side: list[int] = []
    while len(active) > 1:
        # maximum adjacency ordering, smallest id on ties for determinism
        conn = {v: 0 for v in active}
        order: list[int] = []
        in_a: set[int] = set()
        for _ in range(len(active)):
            x = max((v for v in active if v not in in_a), key=lambda v: (conn[v], -v))
            order.append(x)
            in_a.add(x)
            for y in active:
                if y not in in_a:
                    conn[y] += w[x][y]
        s, t = order[-2], order[-1]
        cut_of_phase = conn[t]
        if best_size is None or cut_of_phase < best_size:
            best_size = cut_of_phase
            best_side = list(groups[t])
        # merge t into s
        for y in active:
            if y not in (s, t):
                w[s][y] += w[t][y]
                w[y][s] = w[s][y]
        groups[s].extend(groups[t])
        active.remove(t)
    return edge_cut(g, VertexSet(g.n, frozenset(best_side)))


def enumerate_cuts(g: Graph, constraint: VertexSet | None = None, max_n: int | None = None):
    """Yield every cut once (up to S/complement symmetry).

    Without a constraint, vertex 0 is fixed inside S.  With a nonempty
    constraint, exactly the cuts whose S side contains it are produced.
    """
    cap = enumeration_cap() if max_n is None else max_n
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds the enumeration cap {cap}")
    if g.n < 2:
        raise TooSmall("cuts need at least 2 vertices")
    full = (1 << g.n) - 1
    forced = constraint.mask if constraint is not None and constraint.members else 1
    free = full & ~forced
    sub = 0
    while True:
        mask = forced | sub
        if mask != full:
            yield edge_cut(g, VertexSet.from_mask(g.n, mask))
        if sub == free:
            return
        sub = (sub - free) & free


def brute_force_edge_connectivity(g: Graph, max_n: int | None = None) -> ConnectivityResult:
    """Oracle k'(G): minimum over every enumerated cut.

    Ties break toward the smallest S in bitmask order, so the witness is
    deterministic.
    """
    cap = enumeration_cap() if max_n is None else max_n
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds the enumeration cap {cap}")
    if g.n < 2:
        raise TooSmall("edge connectivity needs at least 2 vertices")
    size, mask = _kernels.min_cut(g.adjacency_masks(), g.n)
    witness = edge_cut(g, VertexSet.from_mask(g.n, mask))
    assert witness.size == size
    return ConnectivityResult(size, witness)
