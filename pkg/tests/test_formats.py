"""Serialization round trips and graph6 conformance."""

import random

import pytest

from regspectra import formats
from regspectra.construct import complete, cycle, edgeless, petersen, random_graph
from regspectra.graphs import Graph


def _random_graphs(count, max_n=12, seed=99):
    rng = random.Random(seed)
    return [random_graph(rng.randint(1, max_n), rng.random(), rng) for _ in range(count)]


@pytest.mark.parametrize("fmt", formats.FORMATS)
def test_round_trip(fmt):
    for g in _random_graphs(25):
        text = formats.dump_graph(g, fmt)
        back = formats.load_graph(text, fmt)
        assert back == g


def test_format_sniffing():
    g = petersen()
    for fmt in formats.FORMATS:
        assert formats.load_graph(formats.dump_graph(g, fmt)) == g


def test_graph6_known_strings():
    assert formats.to_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
    assert formats.to_graph6(edgeless(2)) == "A?"
    assert formats.to_graph6(edgeless(1)) == "@"
    assert formats.from_graph6("A_") == Graph.from_edges(2, [(0, 1)])


def test_graph6_against_networkx():
    nx = pytest.importorskip("networkx")
    for g in _random_graphs(25, seed=7) + [petersen(), complete(9), cycle(13)]:
        ours = formats.to_graph6(g)
        gx = nx.Graph()
        gx.add_nodes_from(range(g.n))
        gx.add_edges_from(g.edges())
        theirs = nx.to_graph6_bytes(gx, header=False).decode().strip()
        assert ours == theirs
        assert formats.from_graph6(theirs) == g


def test_graph6_large_order_header():
    g = edgeless(80)
    s = formats.to_graph6(g)
    assert s.startswith(chr(126))
    assert formats.from_graph6(s) == g


def test_edgelist_errors():
    with pytest.raises(ValueError):
        formats.from_edgelist_text("")
    with pytest.raises(ValueError):
        formats.from_edgelist_text("2 1\n1 0\n")  # u < v violated
    with pytest.raises(ValueError):
        formats.from_edgelist_text("2 2\n0 1\n")  # wrong edge count


def test_graph6_errors():
    with pytest.raises(ValueError):
        formats.from_graph6("")
    with pytest.raises(ValueError):
        formats.from_graph6("A")  # missing body
    with pytest.raises(ValueError):
        formats.from_graph6("\x1f\x1f")  # characters out of range


def test_graph6_order_boundary():
    # 62 is the last single-byte order; 63 switches to the 3-byte header
    assert formats.to_graph6(edgeless(62))[0] == chr(62 + 63)
    s63 = formats.to_graph6(edgeless(63))
    assert s63[0] == chr(126)
    assert formats.from_graph6(s63) == edgeless(63)
