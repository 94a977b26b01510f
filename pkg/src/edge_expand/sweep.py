"""Falsification sweeps: run the cut conclusions against many instances.

The exhaustive driver walks every labeled graph up to a vertex bound, every
partition, and every cut containing V2; the randomized driver samples
biased expansion instances.  Candidate cuts are pre-filtered with the
bitmask kernels, then every surviving cut is evaluated by the same code
path as ``verify_theorem`` so the sweep exercises the real checker.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import _kernels
from .errors import TooLarge
from .expansion import (
    Partition,
    TheoremReport,
    _theorem_report,
    contracted_metric,
    make_partition,
)
from .connectivity import enumeration_cap
from .graph import Graph, VertexSet, new_graph


@dataclass
class Violation:
    edges: tuple[tuple[int, int], ...]
    v2: tuple[int, ...]
    report: TheoremReport


@dataclass
class SweepSummary:
    graphs: int = 0
    partitions: int = 0
    applicable: int = 0
    inapplicable_cuts: int = 0
    violations: list[Violation] = field(default_factory=list)

    def merge(self, other: "SweepSummary") -> None:
        self.graphs += other.graphs
        self.partitions += other.partitions
        self.applicable += other.applicable
        self.inapplicable_cuts += other.inapplicable_cuts
        self.violations.extend(other.violations)


def reports_for_all_cuts(
    g: Graph,
    p: Partition,
    max_n: int | None = None,
    include_inapplicable: bool = False,
) -> list[TheoremReport]:
    """Theorem reports for every cut with V2 inside S, one metric build."""
    cap = enumeration_cap() if max_n is None else max_n
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds the enumeration cap {cap}")
    metric = contracted_metric(g, p)
    full = (1 << g.n) - 1
    forced = p.v2.mask
    free = full & ~forced
    reports = []
    sub = 0
    while True:
        mask = forced | sub
        if mask != full:
            report = _theorem_report(g, p, VertexSet.from_mask(g.n, mask), metric)
            if report.applicable or include_inapplicable:
                reports.append(report)
        if sub == free:
            break
        sub = (sub - free) & free
    return reports


# ---------------------------------------------------------------------------
# bitmask helpers shared by the exhaustive drivers


def _neighbors_of_set(adj: list[int], mask: int) -> int:
    out = 0
    m = mask
    v = 0
    while m:
        if m & 1:
            out |= adj[v]
        m >>= 1
        v += 1
    return out


def _bits(mask: int):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def _is_connected_mask(adj: list[int], n: int) -> bool:
    full = (1 << n) - 1
    reach = 1
    while True:
        nxt = reach | _neighbors_of_set(adj, reach)
        if nxt == reach:
            return reach == full
        reach = nxt


def contracted_diameter_le2_masks(adj: list[int], n: int, v2_mask: int) -> bool:
    """Bitmask fast path for 'contracted diameter <= 2'.

    Must agree with ``contracted_metric(...).diameter <= 2``; the test
    suite checks the two routes against each other.
    """
    full = (1 << n) - 1
    l0 = v2_mask
    l1 = _neighbors_of_set(adj, l0) & ~l0
    l01 = l0 | l1
    l2 = _neighbors_of_set(adj, l01) & ~l01
    if l01 | l2 != full:
        return False  # some vertex at distance >= 3 from V2
    v1 = full & ~v2_mask
    adj1 = [adj[v] & v1 for v in range(n)]
    # vertices at distance 2 from V2 must reach every V1 vertex in <= 2 G1 steps
    for x in _bits(l2):
        r = adj1[x]
        r2 = r | (1 << x) | _neighbors_of_set(adj1, r)
        if r2 & v1 != v1:
            return False
    return True


def _all_edge_lists(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        edges = []
        rest = bits
        i = 0
        while rest:
            if rest & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                edges.append(pairs[i])
            rest >>= 1
            i += 1
        yield edges, adj


def _sweep_one_partition(
    g: Graph, adj: list[int], v2_mask: int, summary: SweepSummary
) -> None:
    """Evaluate every candidate cut (size below min degree over V1) once."""
    n = g.n
    v1_mask = ((1 << n) - 1) & ~v2_mask
    k = min(adj[v].bit_count() for v in _bits(v1_mask))
    summary.partitions += 1
    if k < 1:
        return
    candidates = _kernels.cuts_below(adj, n, v2_mask, k)
    if not candidates:
        return
    if not contracted_diameter_le2_masks(adj, n, v2_mask):
        return
    p = make_partition(g, VertexSet.from_mask(n, v2_mask))
    metric = contracted_metric(g, p)
    assert metric.diameter <= 2  # fast path and metric route must agree
    for mask in candidates:
        report = _theorem_report(g, p, VertexSet.from_mask(n, mask), metric)
        if not report.applicable:
            summary.inapplicable_cuts += 1
            continue
        summary.applicable += 1
        if not report.all_conclusions_hold:
            summary.violations.append(
                Violation(tuple(sorted(g.edges)), tuple(sorted(_bits(v2_mask))), report)
            )


def exhaustive_theorem_sweep(max_n: int = 6) -> SweepSummary:
    """All connected labeled graphs with 2..max_n vertices, all partitions."""
    summary = SweepSummary()
    for n in range(2, max_n + 1):
        full = (1 << n) - 1
        for edges, adj in _all_edge_lists(n):
            if not _is_connected_mask(adj, n):
                continue
            summary.graphs += 1
            g = new_graph(n, edges)
            for v2_mask in range(1, full):
                _sweep_one_partition(g, adj, v2_mask, summary)
    return summary


def random_theorem_sweep(
    instances: int, seed: int = 0, max_n: int = 14
) -> SweepSummary:
    """Randomized sweep over biased expansion instances."""
    from .generators import random_expansion_instance

    rng = random.Random(seed)
    summary = SweepSummary()
    for _ in range(instances):
        k = rng.randint(2, 4)
        n2 = rng.randint(k + 1, k + 3)
        n1 = rng.randint(k + 1, min(k + 4, max_n - n2))
        g, p = random_expansion_instance(n1, n2, k, seed=rng.getrandbits(32))
        summary.graphs += 1
        _sweep_one_partition(g, g.adjacency_masks(), p.v2.mask, summary)
    return summary


# ---------------------------------------------------------------------------
# midpoint sweep: every pair at contracted distance 2 has a distance-1 midpoint


@dataclass
class MidpointSummary:
    partitions: int = 0
    pairs_at_two: int = 0
    violations: int = 0


def _midpoint_check_partition(
    adj: list[int], n: int, v2_mask: int, summary: MidpointSummary
) -> None:
    full = (1 << n) - 1
    v1 = full & ~v2_mask
    l0 = v2_mask
    l1 = _neighbors_of_set(adj, l0) & ~l0
    l2 = _neighbors_of_set(adj, l0 | l1) & ~(l0 | l1)
    d_to_v2 = {}
    for x in _bits(v1):
        if l1 >> x & 1:
            d_to_v2[x] = 1
        elif l2 >> x & 1:
            d_to_v2[x] = 2
        else:
            d_to_v2[x] = 3  # >= 3 or unreachable; exact value irrelevant here
    adj1 = [adj[v] & v1 for v in range(n)]
    ball1 = {}
    for x in _bits(v1):
        ball1[x] = adj1[x] | (v2_mask if d_to_v2[x] == 1 else 0)
    summary.partitions += 1

    v1_bits = list(_bits(v1))
    for i, x in enumerate(v1_bits):
        # pair (x, any V2 vertex): delta = d(x, V2)
        if d_to_v2[x] == 2:
            summary.pairs_at_two += 1
            if not ball1[x] & l1:
                summary.violations += 1
        r2 = _neighbors_of_set(adj1, adj1[x])
        for y in v1_bits[i + 1 :]:
            if adj1[x] >> y & 1:
                continue  # delta = 1
            at_two = (r2 >> y & 1) or (d_to_v2[x] == 1 and d_to_v2[y] == 1)
            if not at_two:
                continue
            summary.pairs_at_two += 1
            if not ball1[x] & ball1[y]:
                summary.violations += 1


def midpoint_sweep(max_n: int = 6, connected_only: bool = False) -> MidpointSummary:
    """Exhaustive midpoint check over all graphs and partitions up to max_n."""
    summary = MidpointSummary()
    for n in range(2, max_n + 1):
        full = (1 << n) - 1
        for _, adj in _all_edge_lists(n):
            if connected_only and not _is_connected_mask(adj, n):
                continue
            for v2_mask in range(1, full):
                _midpoint_check_partition(adj, n, v2_mask, summary)
    return summary
