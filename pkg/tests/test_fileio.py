import pytest

from edge_expand import VertexSet, new_graph
from edge_expand.errors import ParseError
from edge_expand.fileio import (
    ParsedGraph,
    format_edge_list,
    format_vertex_line,
    parse_edge_list,
    parse_vertex_line,
)


class TestParseEdgeList:
    def test_header_keeps_ids_and_isolated_vertices(self):
        parsed = parse_edge_list("n 5\n0 1\n1 2\n")
        assert parsed.graph.n == 5
        assert parsed.graph.edges == frozenset({(0, 1), (1, 2)})
        assert parsed.id_map == (0, 1, 2, 3, 4)

    def test_headerless_dense_remap(self):
        parsed = parse_edge_list("10 30\n30 7\n")
        assert parsed.graph.n == 3
        assert parsed.id_map == (7, 10, 30)
        assert parsed.graph.edges == frozenset({(1, 2), (0, 2)})
        assert parsed.to_dense(30) == 2
        assert parsed.to_original(0) == 7

    def test_comments_and_blanks(self):
        text = "# a triangle\n\nn 3   # header\n0 1\n1 2  # last two\n2 0\n"
        assert parse_edge_list(text).graph.m == 3

    def test_non_integer_id(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("0 x\n")
        assert exc.value.line == 1

    def test_wrong_arity(self):
        with pytest.raises(ParseError):
            parse_edge_list("0 1 2\n")

    def test_loop_rejected(self):
        with pytest.raises(ParseError):
            parse_edge_list("3 3\n")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ParseError):
            parse_edge_list("0 1\n1 0\n")

    def test_id_beyond_header(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("n 3\n0 5\n")
        assert exc.value.line == 2

    def test_duplicate_header(self):
        with pytest.raises(ParseError):
            parse_edge_list("n 3\nn 3\n0 1\n")

    def test_negative_id(self):
        with pytest.raises(ParseError):
            parse_edge_list("-1 2\n")

    def test_unknown_dense_lookup(self):
        parsed = parse_edge_list("0 1\n")
        with pytest.raises(ParseError):
            parsed.to_dense(99)


class TestRoundTrip:
    def test_format_then_parse_identity(self):
        g = new_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        parsed = ParsedGraph(g, tuple(range(4)))
        again = parse_edge_list(format_edge_list(parsed))
        assert again.graph.edges == g.edges
        assert again.graph.n == g.n
        assert again.id_map == parsed.id_map

    def test_original_ids_survive(self):
        parsed = parse_edge_list("5 9\n9 12\n")
        text = format_vertex_line(VertexSet.of(3, {0, 2}), parsed)
        assert text == "5 12\n"


class TestParseVertexLine:
    def test_basic(self):
        parsed = parse_edge_list("n 4\n0 1\n2 3\n")
        vs = parse_vertex_line("1 3\n", parsed)
        assert vs.members == frozenset({1, 3})

    def test_maps_original_ids(self):
        parsed = parse_edge_list("5 9\n9 12\n")
        vs = parse_vertex_line("12 5\n", parsed)
        assert vs.members == frozenset({0, 2})

    def test_unknown_id(self):
        parsed = parse_edge_list("n 2\n0 1\n")
        with pytest.raises(ParseError):
            parse_vertex_line("7\n", parsed)

    def test_two_lines_rejected(self):
        parsed = parse_edge_list("n 3\n0 1\n")
        with pytest.raises(ParseError):
            parse_vertex_line("0\n1\n", parsed)

    def test_comment_only_lines_ignored(self):
        parsed = parse_edge_list("n 3\n0 1\n")
        vs = parse_vertex_line("# note\n0 2\n", parsed)
        assert vs.members == frozenset({0, 2})
