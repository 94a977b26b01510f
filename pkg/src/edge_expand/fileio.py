"""Text formats: edge lists, vertex-set lines.

Edge list: ``#`` starts a comment, an optional ``n <count>`` header fixes
the universe size (ids then must be < count and are used as-is), every
other non-empty line is ``u v``.  Without a header the universe is the set
of ids that appear, remapped to dense ids; the mapping is retained so
reports can speak in original ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EdgeExpandError, ParseError
from .graph import Graph, VertexSet, new_graph


@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph
    id_map: tuple[int, ...]  # dense id -> original id

    def to_original(self, v: int) -> int:
        return self.id_map[v]

    def to_dense(self, original: int) -> int:
        try:
            return self._dense()[original]
        except KeyError:
            raise ParseError(f"unknown vertex id {original}")

    def _dense(self) -> dict[int, int]:
        return {orig: i for i, orig in enumerate(self.id_map)}


def parse_edge_list(text: str) -> ParsedGraph:
    header_n: int | None = None
    raw_edges: list[tuple[int, int, int]] = []  # (u, v, lineno)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if header_n is not None:
                raise ParseError("duplicate 'n' header", lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"malformed header {line!r}", lineno)
            header_n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", lineno)
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {line!r}", lineno)
        raw_edges.append((u, v, lineno))

    if header_n is not None:
        id_map = tuple(range(header_n))
        dense = {i: i for i in range(header_n)}
        n = header_n
    else:
        seen = sorted({x for u, v, _ in raw_edges for x in (u, v)})
        id_map = tuple(seen)
        dense = {orig: i for i, orig in enumerate(seen)}
        n = len(seen)
    edges = []
    for u, v, lineno in raw_edges:
        if u not in dense or v not in dense:
            raise ParseError(f"vertex id outside declared universe in '{u} {v}'", lineno)
        edges.append((dense[u], dense[v]))
    try:
        g = new_graph(n, edges)
    except EdgeExpandError as exc:
        raise ParseError(str(exc)) from exc
    return ParsedGraph(g, id_map)


def format_edge_list(parsed: ParsedGraph) -> str:
    """Deterministic emission; re-parses to the identical graph and id map.

    Only valid when the id map is the identity (which is what the
    generators produce); the ``n`` header pins isolated vertices.
    """
    g = parsed.graph
    lines = [f"n {g.n}"]
    for u, v in sorted(g.edges):
        lines.append(f"{parsed.to_original(u)} {parsed.to_original(v)}")
    return "\n".join(lines) + "\n"


def parse_vertex_line(text: str, parsed: ParsedGraph) -> VertexSet:
    """A vertex set file: one line of whitespace-separated original ids."""
    ids: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ids:
            raise ParseError("vertex set file must contain a single id line", lineno)
        for token in line.split():
            try:
                ids.append(int(token))
            except ValueError:
                raise ParseError(f"non-integer vertex id {token!r}", lineno)
    dense = parsed._dense()
    members = set()
    for original in ids:
        if original not in dense:
            raise ParseError(f"unknown vertex id {original}")
        members.add(dense[original])
    return VertexSet.of(parsed.graph.n, members)


def format_vertex_line(vs: VertexSet, parsed: ParsedGraph) -> str:
    return " ".join(str(parsed.to_original(v)) for v in sorted(vs.members)) + "\n"
