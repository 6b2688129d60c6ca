"""graph6 and edge-list codecs."""

import pytest

import zforce as zf
from zforce.codec import Graph6Error, looks_like_graph6, parse_edge_list, parse_graph6, to_graph6


def reference_graph6(n: int, edges) -> str:
    """Independent string-of-bits encoder used as the round-trip oracle."""
    present = {frozenset(e) for e in edges}
    stream = ""
    for col in range(1, n):
        for row in range(col):
            stream += "1" if frozenset((row, col)) in present else "0"
    while len(stream) % 6:
        stream += "0"
    chunks = [chr(int(stream[i:i + 6], 2) + 63) for i in range(0, len(stream), 6)]
    return chr(n + 63) + "".join(chunks)


def test_single_vertex_is_at_sign():
    g = parse_graph6("@")
    assert g.n == 1 and g.edge_count() == 0
    assert to_graph6(g) == "@"


def test_k23_code_matches_reference_encoder():
    edges = [(0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)]
    assert reference_graph6(5, edges) == "DFw"
    g = parse_graph6("DFw")
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in edges)


def test_known_codes():
    assert to_graph6(zf.complete(4)) == "C~"
    assert to_graph6(zf.cycle(5)) == "Dhc"
    assert parse_graph6("Bg").edges() == [(0, 1), (1, 2)]


def test_encoder_agrees_with_reference_on_corpus(random_corpus, named_graphs):
    for g in list(named_graphs.values()) + random_corpus[:100]:
        assert to_graph6(g) == reference_graph6(g.n, g.edges())


def test_roundtrip_on_corpus(random_corpus, named_graphs):
    for g in list(named_graphs.values()) + random_corpus[:100]:
        code = to_graph6(g)
        assert parse_graph6(code) == g
        assert to_graph6(parse_graph6(code)) == code


def test_header_prefix_accepted():
    assert parse_graph6(">>graph6<<C~") == zf.complete(4)


def test_three_byte_length_header():
    g = zf.path(80)
    code = to_graph6(g)
    assert code.startswith("~")
    assert parse_graph6(code) == g


def test_errors_carry_byte_offsets():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C~\x7f")
    assert exc.value.offset == 2
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # truncated data
    with pytest.raises(Graph6Error, match="trailing garbage"):
        parse_graph6("C~~~")
    with pytest.raises(Graph6Error, match="padding"):
        parse_graph6("D?A")  # nonzero bits beyond the triangle


def test_edge_list_with_and_without_order_line():
    g = parse_edge_list("5\n0 3\n1 3\n2 4\n")
    assert g.n == 5 and g.edge_count() == 3
    g2 = parse_edge_list("0 1 1 2")
    assert g2.n == 3 and g2.edges() == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        parse_edge_list("0 x")
    with pytest.raises(ValueError):
        parse_edge_list("")


def test_edge_list_roundtrip(named_graphs):
    for g in named_graphs.values():
        assert parse_edge_list(zf.to_edge_list(g)) == g


def test_sniffer_distinguishes_formats():
    assert looks_like_graph6("DFw")
    assert looks_like_graph6(">>graph6<<DFw")
    assert not looks_like_graph6("5")
    assert not looks_like_graph6("0 1")
