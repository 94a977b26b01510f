"""Simple undirected graphs and the set/cut/distance primitives.

Vertices are dense integer ids ``0..n-1``.  Graphs, vertex sets and cuts
are immutable after construction; every operation here is a pure function,
so concurrent reads are safe.

Distances are ``int`` when finite and ``math.inf`` otherwise; arithmetic
on distances saturates at infinity.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdge,
    EmptySet,
    EmptySide,
    LoopEdge,
    VertexOutOfRange,
)

INF = math.inf

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertex universe ``[0, n)``."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for v in self.members:
            if not 0 <= v < self.n:
                raise VertexOutOfRange(v, self.n)

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        return cls(n, frozenset(members))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, frozenset(range(n)))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "VertexSet":
        return cls(n, frozenset(v for v in range(n) if mask >> v & 1))

    @property
    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, frozenset(range(self.n)) - self.members)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.members & other.members)

    def union(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.members | other.members)

    def issubset(self, other: "VertexSet") -> bool:
        return self.members <= other.members

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no multi-edges."""

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[frozenset[int], ...] = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks (bit v set iff v is a neighbor)."""
        masks = []
        for adj in self.adjacency:
            m = 0
            for w in adj:
                m |= 1 << w
            masks.append(m)
        return masks

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def vertices(self) -> range:
        return range(self.n)


def new_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and build a Graph.

    Loops and repeated unordered pairs are rejected rather than repaired:
    the input is supposed to describe a simple graph already.
    """
    seen: set[Edge] = set()
    for u, v in edge_list:
        if u == v:
            raise LoopEdge(u)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        e = _norm_edge(u, v)
        if e in seen:
            raise DuplicateEdge(u, v)
        seen.add(e)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in seen:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, frozenset(seen), tuple(frozenset(a) for a in adj))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(v, g.n)


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return len(g.adjacency[v])


def min_degree(g: Graph, over: Iterable[int] | None = None) -> int:
    vs = range(g.n) if over is None else over
    return min(len(g.adjacency[v]) for v in vs)


def neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.n, g.adjacency[v])


def bracket(g: Graph, a: VertexSet, b: VertexSet) -> frozenset[Edge]:
    """Edges with one endpoint in ``a`` and the other in ``b``.

    Symmetric in its arguments; when the sets overlap, an edge inside the
    overlap qualifies (either assignment of its endpoints works).
    """
    am, bm = a.members, b.members
    out = set()
    for u, v in g.edges:
        if (u in am and v in bm) or (v in am and u in bm):
            out.add((u, v))
    return frozenset(out)


def induced_subgraph(g: Graph, a: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``a`` with compacted ids plus the map back to original ids.

    ``id_map[i]`` is the original id of compact vertex ``i``; original ids
    are assigned in increasing order.
    """
    if not a.members:
        raise EmptySet("cannot induce a subgraph on the empty set")
    id_map = tuple(sorted(a.members))
    back = {orig: i for i, orig in enumerate(id_map)}
    edges = [
        (back[u], back[v])
        for u, v in g.edges
        if u in a.members and v in a.members
    ]
    return new_graph(len(id_map), edges), id_map


def distance(g: Graph, v: int, w: int) -> int | float:
    """BFS shortest-path length; ``inf`` when v and w are disconnected."""
    _check_vertex(g, v)
    _check_vertex(g, w)
    if v == w:
        return 0
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == w:
                    return dist[y]
                queue.append(y)
    return INF


def distances_from(g: Graph, sources: Iterable[int]) -> list[int | float]:
    """Multi-source BFS distances; ``inf`` for unreachable vertices."""
    dist: list[int | float] = [INF] * g.n
    queue: deque[int] = deque()
    for s in sources:
        _check_vertex(g, s)
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance_to_set(g: Graph, v: int, a: VertexSet) -> int | float:
    if not a.members:
        raise EmptySet("distance to the empty set is undefined")
    _check_vertex(g, v)
    if v in a.members:
        return 0
    return distances_from(g, a.members)[v]


@dataclass(frozen=True)
class Cut:
    """A bipartition (S, complement) together with its crossing edges."""

    s_side: VertexSet
    crossing_edges: frozenset[Edge]

    @property
    def size(self) -> int:
        return len(self.crossing_edges)


def edge_cut(g: Graph, s: VertexSet) -> Cut:
    if not s.members:
        raise EmptySide("S must be nonempty")
    if len(s.members) == g.n:
        raise EmptySide("the complement of S must be nonempty")
    return Cut(s, bracket(g, s, s.complement()))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d != INF for d in distances_from(g, [0]))


def connected_component(g: Graph, v: int) -> VertexSet:
    dist = distances_from(g, [v])
    return VertexSet(g.n, frozenset(x for x in range(g.n) if dist[x] != INF))
