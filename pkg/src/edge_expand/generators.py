"""Reproducible instance generation and figure-statistics search.

Gadgets are built from cliques joined by extra edges, mirroring the way
the reference pictures are drawn (filled polygons = cliques, arcs =
edges).  ``instance_search`` samples gadget templates, applies local edge
edits, and returns only instances that re-verify against the measuring
modules; figure reproduction means statistics matching, not isomorphism.
All routines are deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import combinations

from . import _kernels
from .connectivity import brute_force_edge_connectivity, edge_connectivity
from .errors import EmptySide, Infeasible
from .expansion import (
    Partition,
    boundary,
    certify,
    contracted_metric,
    make_partition,
    phi,
    verify_theorem,
)
from .graph import Graph, VertexSet, min_degree, new_graph
from .sweep import contracted_diameter_le2_masks


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi style G(n, p), deterministic for a fixed seed."""
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must be in [0,1], got {p}")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return new_graph(n, edges)


@dataclass(frozen=True)
class GadgetSpec:
    """Cliques plus extra edges, split into a V2 side and a V1 side.

    Vertices are numbered globally: the V2 cliques first (in order), then
    the V1 cliques.  Edge lists use these global ids; ``cross_edges``
    pairs are (V1 vertex, V2 vertex).
    """

    g2_cliques: tuple[int, ...]
    g1_cliques: tuple[int, ...]
    g2_edges: tuple[tuple[int, int], ...] = ()
    g1_edges: tuple[tuple[int, int], ...] = ()
    cross_edges: tuple[tuple[int, int], ...] = ()

    @property
    def n2(self) -> int:
        return sum(self.g2_cliques)

    @property
    def n(self) -> int:
        return self.n2 + sum(self.g1_cliques)


def build_gadget(spec: GadgetSpec) -> tuple[Graph, Partition]:
    """Materialize a gadget; duplicate or side-crossing edges are errors."""
    if spec.n2 == 0 or sum(spec.g1_cliques) == 0:
        raise EmptySide("both sides of a gadget need at least one vertex")
    edges: list[tuple[int, int]] = []
    start = 0
    for size in list(spec.g2_cliques) + list(spec.g1_cliques):
        edges.extend(combinations(range(start, start + size), 2))
        start += size
    n2 = spec.n2
    for u, v in spec.g2_edges:
        if not (u < n2 and v < n2):
            raise ValueError(f"g2 edge ({u},{v}) leaves the V2 side")
        edges.append((u, v))
    for u, v in spec.g1_edges:
        if not (u >= n2 and v >= n2):
            raise ValueError(f"g1 edge ({u},{v}) leaves the V1 side")
        edges.append((u, v))
    for x, y in spec.cross_edges:
        if not (x >= n2 and y < n2):
            raise ValueError(f"cross edge ({x},{y}) must pair V1 with V2")
        edges.append((x, y))
    g = new_graph(spec.n, edges)
    p = make_partition(g, VertexSet.of(g.n, range(n2)))
    return g, p


# --- GadgetSpec text serialization (CLI `gen` input) -----------------------

_SPEC_KEYS = ("g2_clique", "g1_clique", "g2_edge", "g1_edge", "cross")


def parse_gadget_spec(text: str) -> GadgetSpec:
    """Key-value lines: g2_clique/g1_clique SIZE, g2_edge/g1_edge/cross U V."""
    from .errors import ParseError

    g2c: list[int] = []
    g1c: list[int] = []
    g2e: list[tuple[int, int]] = []
    g1e: list[tuple[int, int]] = []
    cross: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        try:
            args = [int(x) for x in parts[1:]]
        except ValueError:
            raise ParseError(f"non-integer argument in {line!r}", lineno)
        if key == "g2_clique" and len(args) == 1:
            g2c.append(args[0])
        elif key == "g1_clique" and len(args) == 1:
            g1c.append(args[0])
        elif key == "g2_edge" and len(args) == 2:
            g2e.append((args[0], args[1]))
        elif key == "g1_edge" and len(args) == 2:
            g1e.append((args[0], args[1]))
        elif key == "cross" and len(args) == 2:
            cross.append((args[0], args[1]))
        else:
            raise ParseError(f"expected one of {_SPEC_KEYS} with ids, got {line!r}", lineno)
    return GadgetSpec(tuple(g2c), tuple(g1c), tuple(g2e), tuple(g1e), tuple(cross))


def format_gadget_spec(spec: GadgetSpec) -> str:
    lines = []
    for size in spec.g2_cliques:
        lines.append(f"g2_clique {size}")
    for size in spec.g1_cliques:
        lines.append(f"g1_clique {size}")
    for u, v in sorted(spec.g2_edges):
        lines.append(f"g2_edge {u} {v}")
    for u, v in sorted(spec.g1_edges):
        lines.append(f"g1_edge {u} {v}")
    for x, y in sorted(spec.cross_edges):
        lines.append(f"cross {x} {y}")
    return "\n".join(lines) + "\n"


# --- target statistics ------------------------------------------------------


@dataclass(frozen=True)
class TargetStats:
    """Statistics an instance must match exactly.

    ``kind`` is "theorem" (the cut S is part of the instance and the cut
    hypotheses must apply) or "corollary" (S is a minimum cut and the
    certifier hypotheses must hold).  ``None`` fields are unconstrained.
    """

    kind: str
    cut_size: int
    k: int
    phi: int
    s_cap_v1_size: int | None = None
    sbar_size: int | None = None
    boundary1_size: int | None = None
    s_cap_v1_eq_boundary2: bool | None = None
    v1_eq_boundary1: bool | None = None


FIGURE_TARGETS: dict[str, TargetStats] = {
    "1a": TargetStats("theorem", 3, 4, 3, s_cap_v1_size=2, sbar_size=5,
                      s_cap_v1_eq_boundary2=True),
    "1b": TargetStats("theorem", 3, 4, 3, s_cap_v1_size=1, sbar_size=5,
                      s_cap_v1_eq_boundary2=False),
    "1c": TargetStats("theorem", 4, 5, 3, s_cap_v1_size=1, sbar_size=6,
                      s_cap_v1_eq_boundary2=False),
    "1d": TargetStats("theorem", 1, 2, 1, s_cap_v1_size=0, sbar_size=3,
                      s_cap_v1_eq_boundary2=True),
    "2a": TargetStats("corollary", 4, 4, 4, boundary1_size=3),
    "2b": TargetStats("corollary", 3, 3, 1, boundary1_size=1,
                      v1_eq_boundary1=True),
}


@dataclass(frozen=True)
class FoundInstance:
    graph: Graph
    partition: Partition
    s: VertexSet  # explicit cut for theorem targets, min-cut witness otherwise
    spec: GadgetSpec
    trials: int


@dataclass(frozen=True)
class NotFound:
    budget: int


# --- template sampling ------------------------------------------------------


def _sample_theorem_spec(t: TargetStats, rng: random.Random) -> GadgetSpec:
    """One clique for the complement side plus loose vertices for S cap V1."""
    sbar = t.sbar_size if t.sbar_size is not None else rng.randint(2, 6)
    s_cap = t.s_cap_v1_size if t.s_cap_v1_size is not None else rng.randint(0, 2)
    core = max(1, sbar - rng.randint(0, 1))
    n_hang = sbar - core  # complement-side vertices outside the core clique
    cross_counts: dict[int, int] = {}
    # local V1 ids: 0..core-1 core, then hangers, then S-side vertices
    v1_size = sbar + s_cap
    for i in range(core, core + n_hang):
        cross_counts[i] = rng.randint(0, 2)
    for i in range(sbar, v1_size):
        cross_counts[i] = rng.randint(2, max(2, t.k - 1))
    for i in rng.sample(range(core), rng.randint(0, min(2, core))):
        cross_counts[i] = rng.randint(1, 2)
    max_cross = max(cross_counts.values(), default=0)
    n2 = max(2, max_cross) + rng.randint(0, 1)

    g1_edges: list[tuple[int, int]] = []
    others = list(range(core))
    for i in range(core, core + n_hang):
        for j in rng.sample(others, rng.randint(1, len(others))):
            g1_edges.append((i, j))
        others.append(i)
    for i in range(sbar, v1_size):
        for j in rng.sample(others, rng.randint(0, min(2, len(others)))):
            g1_edges.append((i, j))
        others.append(i)

    cross: list[tuple[int, int]] = []
    for i, count in cross_counts.items():
        for w in rng.sample(range(n2), min(count, n2)):
            cross.append((n2 + i, w))
    return GadgetSpec(
        g2_cliques=(n2,),
        g1_cliques=(core,) + (1,) * (n_hang + s_cap),
        g1_edges=tuple((n2 + u, n2 + v) for u, v in g1_edges),
        cross_edges=tuple(cross),
    )


def _sample_corollary_spec(t: TargetStats, rng: random.Random) -> GadgetSpec:
    n2 = t.k + 1 + rng.randint(0, 1)
    core = rng.choice([1, max(1, t.k - 1), t.k, t.k + 1])
    b1 = t.boundary1_size if t.boundary1_size is not None else rng.randint(1, core)
    b1 = min(b1, core)
    cross: list[tuple[int, int]] = []
    for i in rng.sample(range(core), b1):
        count = rng.randint(1, t.k) if core > 1 else rng.randint(t.k, min(t.k + 1, n2))
        for w in rng.sample(range(n2), min(count, n2)):
            cross.append((n2 + i, w))
    return GadgetSpec(g2_cliques=(n2,), g1_cliques=(core,), cross_edges=tuple(cross))


def _mutate_spec(spec: GadgetSpec, rng: random.Random) -> GadgetSpec:
    """One local edit: toggle a random cross edge or V1-side extra edge."""
    n2 = spec.n2
    n = spec.n
    if rng.random() < 0.7:
        x = rng.randrange(n2, n)
        y = rng.randrange(n2)
        edge = (x, y)
        cross = set(spec.cross_edges)
        cross.symmetric_difference_update({edge})
        return replace(spec, cross_edges=tuple(sorted(cross)))
    if n - n2 < 2:
        return spec
    u, v = rng.sample(range(n2, n), 2)
    edge = (min(u, v), max(u, v))
    extra = {(min(a, b), max(a, b)) for a, b in spec.g1_edges}
    extra.symmetric_difference_update({edge})
    return replace(spec, g1_edges=tuple(sorted(extra)))


# --- evaluation -------------------------------------------------------------


def _clique_edge_overlap(spec: GadgetSpec) -> bool:
    """True when an extra g1 edge falls inside a clique (→ duplicate)."""
    bounds = []
    start = spec.n2
    for size in spec.g1_cliques:
        bounds.append((start, start + size))
        start += size
    for u, v in spec.g1_edges:
        for lo, hi in bounds:
            if lo <= u < hi and lo <= v < hi:
                return True
    return False


def _match_theorem(t: TargetStats, g: Graph, p: Partition) -> VertexSet | None:
    adj = g.adjacency_masks()
    k = min_degree(g, p.v1.members)
    if k != t.k or phi(g, p) != t.phi:
        return None
    if not contracted_diameter_le2_masks(adj, g.n, p.v2.mask):
        return None
    b2 = boundary(g, p, 2).members
    for mask in _kernels.cuts_below(adj, g.n, p.v2.mask, k):
        s = VertexSet.from_mask(g.n, mask)
        if _kernels.cut_size(adj, mask) != t.cut_size:
            continue
        s_cap_v1 = s.members & p.v1.members
        if t.s_cap_v1_size is not None and len(s_cap_v1) != t.s_cap_v1_size:
            continue
        if t.sbar_size is not None and g.n - len(s.members) != t.sbar_size:
            continue
        if t.s_cap_v1_eq_boundary2 is not None and (s_cap_v1 == b2) != t.s_cap_v1_eq_boundary2:
            continue
        return s
    return None


def _match_corollary(t: TargetStats, g: Graph, p: Partition) -> VertexSet | None:
    if min_degree(g) < t.k or phi(g, p) != t.phi:
        return None
    b1 = boundary(g, p, 1)
    if t.boundary1_size is not None and len(b1.members) != t.boundary1_size:
        return None
    if t.v1_eq_boundary1 is not None and (b1.members == p.v1.members) != t.v1_eq_boundary1:
        return None
    cert = certify(g, p, t.k)
    if not cert.certified:
        return None
    result = brute_force_edge_connectivity(g)
    if result.kprime != t.cut_size:
        return None
    return result.witness.s_side


def _evaluate(t: TargetStats, spec: GadgetSpec) -> tuple[Graph, Partition, VertexSet] | None:
    if _clique_edge_overlap(spec):
        return None
    try:
        g, p = build_gadget(spec)
    except Exception:
        return None
    match = _match_theorem(t, g, p) if t.kind == "theorem" else _match_corollary(t, g, p)
    if match is None:
        return None
    return g, p, match


def _reverify(t: TargetStats, g: Graph, p: Partition, s: VertexSet) -> bool:
    """Independent re-check through the public measuring API."""
    if phi(g, p) != t.phi:
        return False
    if t.kind == "theorem":
        report = verify_theorem(g, p, s)
        b2 = boundary(g, p, 2).members
        s_cap_v1 = s.members & p.v1.members
        return (
            report.applicable
            and report.cut_size == t.cut_size
            and report.k == t.k
            and (t.s_cap_v1_size is None or len(s_cap_v1) == t.s_cap_v1_size)
            and (t.sbar_size is None or g.n - len(s.members) == t.sbar_size)
            and (t.s_cap_v1_eq_boundary2 is None
                 or (s_cap_v1 == b2) == t.s_cap_v1_eq_boundary2)
        )
    cert = certify(g, p, t.k)
    b1 = boundary(g, p, 1)
    return (
        cert.certified
        and edge_connectivity(g).kprime == t.cut_size
        and contracted_metric(g, p).diameter <= 2
        and (t.boundary1_size is None or len(b1.members) == t.boundary1_size)
        and (t.v1_eq_boundary1 is None
             or (b1.members == p.v1.members) == t.v1_eq_boundary1)
    )


_EDITS_PER_SAMPLE = 4


def instance_search(
    target: TargetStats, budget: int, seed: int = 0
) -> FoundInstance | NotFound:
    """Randomized gadget sampling with local edge edits, budget-bounded.

    The budget counts candidate evaluations.  A returned instance has been
    re-verified by the measuring modules; NotFound makes no claim of
    nonexistence.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    rng = random.Random(seed)
    sample = _sample_theorem_spec if target.kind == "theorem" else _sample_corollary_spec
    trials = 0
    while trials < budget:
        spec = sample(target, rng)
        trials += 1
        hit = _evaluate(target, spec)
        if hit is None:
            for _ in range(_EDITS_PER_SAMPLE):
                if trials >= budget:
                    break
                spec2 = _mutate_spec(spec, rng)
                trials += 1
                hit = _evaluate(target, spec2)
                if hit is not None:
                    spec = spec2
                    break
        if hit is not None:
            g, p, s = hit
            if _reverify(target, g, p, s):
                return FoundInstance(g, p, s, spec, trials)
    return NotFound(budget)


# --- randomized expansion instances ----------------------------------------


def random_expansion_instance(
    n1: int, n2: int, k: int, seed: int = 0
) -> tuple[Graph, Partition]:
    """A k-edge-connected base graph with a randomly adjoined V1 side.

    The base side is resampled until its edge connectivity reaches k; the
    adjoined side gets internal and cross edges biased so that minimum
    degree >= k and contracted diameter <= 2 hold often (not always).
    """
    if n2 <= k:
        raise Infeasible(f"a {k}-edge-connected base needs more than {k} vertices")
    rng = random.Random(seed)

    g2_edges: list[tuple[int, int]] | None = None
    for attempt in range(50):
        p_edge = min(1.0, 0.6 + attempt * 0.02)
        candidate = [e for e in combinations(range(n2), 2) if rng.random() < p_edge]
        g2 = new_graph(n2, candidate)
        if n2 >= 2 and edge_connectivity(g2).kprime >= k:
            g2_edges = candidate
            break
    if g2_edges is None:
        g2_edges = list(combinations(range(n2), 2))  # complete graph always works

    n = n1 + n2
    edges = set(g2_edges)
    q = rng.uniform(0.5, 0.9)
    for u, v in combinations(range(n2, n), 2):
        if rng.random() < q:
            edges.add((u, v))
    anchors = rng.sample(range(n2, n), rng.randint(1, n1))
    for a in anchors:
        for w in rng.sample(range(n2), min(rng.randint(1, k), n2)):
            edges.add((w, a))

    # top up degrees to k, preferring internal V1 edges
    deg = {v: 0 for v in range(n)}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for v in range(n2, n):
        while deg[v] < k:
            internal = [
                u for u in range(n2, n)
                if u != v and (min(u, v), max(u, v)) not in edges
            ]
            external = [u for u in range(n2) if (u, v) not in edges]
            pool = internal if internal and (rng.random() < 0.7 or not external) else external
            u = rng.choice(pool)
            edges.add((min(u, v), max(u, v)))
            deg[u] += 1
            deg[v] += 1

    g = new_graph(n, sorted(edges))
    return g, make_partition(g, VertexSet.of(n, range(n2)))
