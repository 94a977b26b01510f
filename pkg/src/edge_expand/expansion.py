"""Contracted distance, boundary/interior sets, Phi, and the two checkers.

The setting: a partition of V(G) into V1 and V2 with induced subgraphs
G1, G2.  V2 behaves like a single contracted point for the metric
``delta``; boundary/interior sets grade V1 vertices by how many edges they
send into V2; Phi lower-bounds the size of any small cut that swallows V2.

``verify_theorem`` evaluates the five structural conclusions claimed for
every applicable cut, recording observed truth values (never assuming
them), so a falsifying instance would surface.  ``certify`` is the
one-directional k-edge-connectedness certifier built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .connectivity import edge_connectivity
from .errors import EmptySide, V2NotInS
from .graph import (
    INF,
    Cut,
    Graph,
    VertexSet,
    distances_from,
    edge_cut,
    induced_subgraph,
    min_degree,
)


@dataclass(frozen=True)
class Partition:
    """A split of V(G) into nonempty V1, V2 with their induced subgraphs."""

    v1: VertexSet
    v2: VertexSet
    g1: Graph
    map1: tuple[int, ...]  # compact G1 id -> original id
    g2: Graph
    map2: tuple[int, ...]


def make_partition(g: Graph, v2: VertexSet) -> Partition:
    if not v2.members:
        raise EmptySide("V2 must be nonempty")
    if len(v2.members) == g.n:
        raise EmptySide("V1 must be nonempty")
    v1 = v2.complement()
    g1, map1 = induced_subgraph(g, v1)
    g2, map2 = induced_subgraph(g, v2)
    return Partition(v1, v2, g1, map1, g2, map2)


@dataclass(frozen=True)
class ContractedMetric:
    """Full delta table, its maximum, and per-vertex distance to V2."""

    table: tuple[tuple[int | float, ...], ...]
    diameter: int | float
    d_to_v2: tuple[int | float, ...]

    def delta(self, x: int, y: int) -> int | float:
        return self.table[x][y]

    def delta_to_set(self, x: int, a: Iterable[int]) -> int | float:
        return min(self.table[x][w] for w in a)


def _delta_table(g: Graph, p: Partition) -> tuple[list[list[int | float]], list[int | float]]:
    """delta(x, y) for all pairs, plus d_G(x, V2) per vertex."""
    n = g.n
    d2 = distances_from(g, p.v2.members)
    # all-pairs distances inside G1, mapped back to original ids
    inv1 = {orig: i for i, orig in enumerate(p.map1)}
    table: list[list[int | float]] = [[INF] * n for _ in range(n)]
    dg1: dict[int, list[int | float]] = {}
    for x in p.v1.members:
        row = distances_from(p.g1, [inv1[x]])
        dg1[x] = row
    for x in range(n):
        for y in range(n):
            if x in p.v2.members and y in p.v2.members:
                table[x][y] = 0
            elif x in p.v2.members:
                table[x][y] = d2[y]
            elif y in p.v2.members:
                table[x][y] = d2[x]
            else:
                table[x][y] = min(dg1[x][inv1[y]], d2[x] + d2[y])
    return table, d2


def contracted_distance(g: Graph, p: Partition, x: int, y: int) -> int | float:
    """delta(x, y): G1-internal distance shortcut through a contracted V2."""
    from .graph import _check_vertex

    _check_vertex(g, x)
    _check_vertex(g, y)
    table, _ = _delta_table(g, p)
    return table[x][y]


def contracted_metric(g: Graph, p: Partition) -> ContractedMetric:
    table, d2 = _delta_table(g, p)
    diameter = max(table[x][y] for x in range(g.n) for y in range(g.n))
    return ContractedMetric(
        tuple(tuple(row) for row in table), diameter, tuple(d2)
    )


def _cross_count(g: Graph, p: Partition, x: int) -> int:
    return len(g.adjacency[x] & p.v2.members)


def boundary(g: Graph, p: Partition, j: int) -> VertexSet:
    """V1 vertices with at least j edges into V2."""
    return VertexSet(
        g.n, frozenset(x for x in p.v1.members if _cross_count(g, p, x) >= j)
    )


def interior(g: Graph, p: Partition, j: int) -> VertexSet:
    """V1 vertices with fewer than j edges into V2."""
    return VertexSet(
        g.n, frozenset(x for x in p.v1.members if _cross_count(g, p, x) < j)
    )


def phi(g: Graph, p: Partition) -> int:
    """Sum over V1 of min(max(1, edges into the level-2 interior), edges into V2)."""
    i2 = interior(g, p, 2).members
    total = 0
    for x in p.v1.members:
        into_i2 = len(g.adjacency[x] & i2)
        total += min(max(1, into_i2), _cross_count(g, p, x))
    return total


@dataclass(frozen=True)
class ExpansionProfile:
    boundary1: VertexSet
    boundary2: VertexSet
    interior2: VertexSet
    phi: int
    k_min_v1: int
    k_min_all: int


def expansion_profile(g: Graph, p: Partition) -> ExpansionProfile:
    return ExpansionProfile(
        boundary1=boundary(g, p, 1),
        boundary2=boundary(g, p, 2),
        interior2=interior(g, p, 2),
        phi=phi(g, p),
        k_min_v1=min_degree(g, p.v1.members),
        k_min_all=min_degree(g),
    )


@dataclass(frozen=True)
class TheoremReport:
    """Observed truth values of the five cut conclusions for one (G, P, S).

    ``k`` is the minimum degree over V1 (the hypothesis as stated);
    ``k_global`` is the minimum over all of V(G), recorded alongside so the
    effect of the alternative reading is visible without being asserted.
    Conclusions are ``None`` when the hypotheses do not hold.
    """

    s_side: VertexSet
    cut_size: int
    k: int
    k_global: int
    diameter: int | float
    applicable: bool
    applicable_with_global_k: bool
    conclusion1: bool | None
    conclusion2: bool | None
    conclusion3: bool | None
    conclusion4: bool | None
    conclusion5: bool | None
    c1_witness: int | None
    c3_chain: tuple[int, int, int, int]  # |S^V1|, |[S,S~]|, k, |S~|
    c3_with_global_k: bool | None
    c5_phi: int

    @property
    def all_conclusions_hold(self) -> bool:
        return bool(
            self.conclusion1
            and self.conclusion2
            and self.conclusion3
            and self.conclusion4
            and self.conclusion5
        )


def _theorem_report(
    g: Graph, p: Partition, s: VertexSet, metric: ContractedMetric
) -> TheoremReport:
    if not p.v2.issubset(s):
        raise V2NotInS("V2 must be contained in the S side")
    cut = edge_cut(g, s)
    k = min_degree(g, p.v1.members)
    k_global = min_degree(g)
    sbar = s.complement()
    s_cap_v1 = s.members & p.v1.members
    applicable = metric.diameter <= 2 and k > cut.size
    applicable_global = metric.diameter <= 2 and k_global > cut.size
    phi_value = phi(g, p)
    chain = (len(s_cap_v1), cut.size, k, len(sbar.members))

    c1 = c2 = c3 = c4 = c5 = None
    witness = None
    c3_global = None
    if applicable:
        for sb in sorted(sbar.members):
            if metric.delta_to_set(sb, s.members) == 2:
                witness = sb
                break
        c1 = witness is not None
        c2 = all(metric.delta_to_set(x, sbar.members) == 1 for x in s.members)
        c3 = len(s_cap_v1) < cut.size < k < len(sbar.members)
        b2 = boundary(g, p, 2).members
        i2 = interior(g, p, 2).members
        c4 = s_cap_v1 <= b2 and i2 <= sbar.members
        c5 = phi_value <= cut.size
    if applicable_global:
        c3_global = len(s_cap_v1) < cut.size < k_global < len(sbar.members)
    return TheoremReport(
        s_side=s,
        cut_size=cut.size,
        k=k,
        k_global=k_global,
        diameter=metric.diameter,
        applicable=applicable,
        applicable_with_global_k=applicable_global,
        conclusion1=c1,
        conclusion2=c2,
        conclusion3=c3,
        conclusion4=c4,
        conclusion5=c5,
        c1_witness=witness,
        c3_chain=chain,
        c3_with_global_k=c3_global,
        c5_phi=phi_value,
    )


def verify_theorem(g: Graph, p: Partition, s: VertexSet) -> TheoremReport:
    """Evaluate the expansion-cut conclusions for one cut with V2 inside S."""
    return _theorem_report(g, p, s, contracted_metric(g, p))


CERTIFIED = "Certified"
NOT_CERTIFIED = "NotCertified"


@dataclass(frozen=True)
class Certificate:
    """Verdict of the k-edge-connectedness certifier.

    Certified is sound (k'(G) >= k follows); NotCertified claims nothing.
    """

    verdict: str
    k: int
    hypothesis_status: tuple[bool, bool, bool]
    alternative_status: tuple[bool, bool, bool]
    reasons: tuple[str, ...]

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED


def certify(g: Graph, p: Partition, k: int) -> Certificate:
    """Certify that G is k-edge-connected from the partition's shape alone.

    Hypotheses: minimum degree >= k everywhere, G2 k-edge-connected, and
    contracted diameter <= 2.  Any one of the alternatives (Phi >= k,
    boundary at least k vertices, V1 all boundary) then suffices.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    reasons: list[str] = []

    h1 = min_degree(g) >= k
    if not h1:
        reasons.append(f"minimum degree {min_degree(g)} < k={k}")
    if len(p.v2.members) >= 2:
        k2 = edge_connectivity(p.g2).kprime
        h2 = k2 >= k
        if not h2:
            reasons.append(f"G2 edge connectivity {k2} < k={k}")
    else:
        h2 = True  # a single-vertex G2 admits no cut at all
    diameter = contracted_metric(g, p).diameter
    h3 = diameter <= 2
    if not h3:
        reasons.append(f"contracted diameter {diameter} > 2")

    phi_value = phi(g, p)
    b1 = boundary(g, p, 1)
    a1 = phi_value >= k
    a2 = len(b1.members) >= k
    a3 = b1.members == p.v1.members
    if a1:
        reasons.append(f"Phi={phi_value} >= k={k}")
    if a2:
        reasons.append(f"|boundary^1 V1|={len(b1.members)} >= k={k}")
    if a3:
        reasons.append("V1 = boundary^1 V1")
    if not (a1 or a2 or a3):
        reasons.append("no alternative condition holds")

    certified = h1 and h2 and h3 and (a1 or a2 or a3)
    return Certificate(
        verdict=CERTIFIED if certified else NOT_CERTIFIED,
        k=k,
        hypothesis_status=(h1, h2, h3),
        alternative_status=(a1, a2, a3),
        reasons=tuple(reasons),
    )
