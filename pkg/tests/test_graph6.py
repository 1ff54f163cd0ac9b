"""graph6 and edge-list serialization."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from proxrem import (
    Graph6Error,
    basic_generator,
    emit_graph6,
    from_edge_list,
    parse_graph6,
)
from proxrem.graph6 import (
    emit_edge_list,
    iter_graph6_file,
    load_graphs,
    parse_edge_list_text,
    write_graph6_file,
)
from proxrem.search import enumerate_connected


class TestWorkedExamples:
    def test_k2(self):
        assert emit_graph6(from_edge_list(2, [(0, 1)])) == "A_"
        assert parse_graph6("A_") == from_edge_list(2, [(0, 1)])

    def test_k3(self):
        assert emit_graph6(basic_generator("complete", 3)) == "Bw"
        assert parse_graph6("Bw") == basic_generator("complete", 3)

    def test_p3(self):
        assert emit_graph6(basic_generator("path", 3)) == "Bg"
        assert parse_graph6("Bg") == basic_generator("path", 3)

    def test_header_tolerated(self):
        assert parse_graph6(">>graph6<<A_") == from_edge_list(2, [(0, 1)])

    def test_bytes_input(self):
        assert parse_graph6(b"Bw\n") == basic_generator("complete", 3)


class TestRoundTrips:
    def test_enumerated_corpus_roundtrip(self, connected_upto_6, connected_7):
        graphs = [g for level in connected_upto_6.values() for g in level] + connected_7
        for g in graphs:
            line = emit_graph6(g)
            assert parse_graph6(line) == g
            assert emit_graph6(parse_graph6(line)) == line

    def test_single_vertex(self):
        g = basic_generator("edgeless", 1)
        assert parse_graph6(emit_graph6(g)) == g

    def test_long_size_form(self):
        g = basic_generator("path", 63)
        line = emit_graph6(g)
        assert line.startswith("~")
        assert parse_graph6(line) == g

    @given(
        st.integers(min_value=1, max_value=40).flatmap(
            lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n * (n - 1) // 2 - 1) if n > 1 else st.integers(0, 0), max_size=60))
        )
    )
    def test_random_graph_roundtrip(self, data):
        n, bit_positions = data
        pairs = [(u, v) for v in range(1, n) for u in range(v)]
        edges = [pairs[b] for b in bit_positions if b < len(pairs)]
        g = from_edge_list(n, edges)
        assert parse_graph6(emit_graph6(g)) == g


class TestErrors:
    def test_empty_line(self):
        with pytest.raises(Graph6Error, match="empty"):
            parse_graph6("")

    def test_byte_out_of_range(self):
        with pytest.raises(Graph6Error, match="outside the graph6 range"):
            parse_graph6("B!")

    def test_wrong_length(self):
        with pytest.raises(Graph6Error, match="needs"):
            parse_graph6("B")
        with pytest.raises(Graph6Error, match="needs"):
            parse_graph6("Bww")

    def test_nonzero_padding(self):
        # order 5 packs 10 bits into 2 bytes, leaving 2 padding bits that
        # must stay zero; set the lowest one
        bad = "D" + chr(63) + chr(63 + 1)
        with pytest.raises(Graph6Error, match="padding"):
            parse_graph6(bad)

    def test_all_zero_body_is_edgeless(self):
        g = parse_graph6("D??")
        assert g.order == 5 and g.edge_count == 0

    def test_triple_extended_rejected(self):
        with pytest.raises(Graph6Error, match="triple-extended"):
            parse_graph6("~~" + "?" * 10)

    def test_emit_size_cap(self):
        class Fake:
            order = 258048

        with pytest.raises(Graph6Error, match="exceeds"):
            emit_graph6(Fake())


class TestFiles:
    def test_write_and_iterate(self, tmp_path):
        path = tmp_path / "corpus.g6"
        graphs = list(enumerate_connected(4))
        assert write_graph6_file(path, graphs) == 6
        assert list(iter_graph6_file(path)) == graphs

    def test_comments_and_blanks_ignored(self, tmp_path):
        path = tmp_path / "with_comments.g6"
        path.write_text("# a comment\n\nBw\n# another\nBg\n")
        assert list(iter_graph6_file(path)) == [
            basic_generator("complete", 3),
            basic_generator("path", 3),
        ]

    def test_load_graphs_sniffs_edge_list(self, tmp_path):
        path = tmp_path / "graph.txt"
        path.write_text("# path on three vertices\n3 2\n0 1\n1 2\n")
        assert load_graphs(path) == [basic_generator("path", 3)]

    def test_load_graphs_sniffs_graph6(self, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("Bw\nBg\n")
        assert load_graphs(path) == [
            basic_generator("complete", 3),
            basic_generator("path", 3),
        ]


class TestEdgeListText:
    def test_roundtrip(self, petersen):
        assert parse_edge_list_text(emit_edge_list(petersen)) == petersen

    def test_header_mismatch(self):
        with pytest.raises(Graph6Error, match="promises"):
            parse_edge_list_text("2 2\n0 1\n")

    def test_non_integer(self):
        with pytest.raises(Graph6Error, match="non-integer"):
            parse_edge_list_text("2 one\n0 1\n")

    def test_missing_header(self):
        with pytest.raises(Graph6Error, match="header"):
            parse_edge_list_text("#\n")
