import io

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from graphboundary.families import complete, path
from graphboundary.graph import build_graph
from graphboundary.graph6 import HEADER, Graph6Error, decode, encode, read_file, write_lines


def test_known_strings():
    assert encode(build_graph(0, [])) == "?"
    assert encode(build_graph(1, [])) == "@"
    assert encode(complete(4)) == "C~"
    assert encode(path(3)) == "Bg"


@given(graphs(min_n=0, max_n=12, connected=False))
def test_round_trip(g):
    assert decode(encode(g)) == g


@given(graphs(min_n=1, max_n=12, connected=False))
def test_agrees_with_networkx(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert encode(g) == ref
    back = nx.from_graph6_bytes(encode(g).encode())
    assert sorted(map(sorted, back.edges())) == sorted(map(list, g.edges()))


def test_long_header():
    g = path(70)
    text = encode(g)
    assert text[0] == "~"
    assert decode(text) == g
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_optional_header_stripped():
    assert decode(HEADER + "C~") == complete(4)


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("C", 1), ("C~~", 2), ("C\x7f", 1), ("~??", 3)],
)
def test_malformed(text, offset):
    with pytest.raises(Graph6Error) as info:
        decode(text)
    assert info.value.offset == offset


def test_file_round_trip():
    gs = [path(1), path(4), complete(5)]
    buf = io.StringIO()
    write_lines(gs, buf)
    buf.seek(0)
    assert list(read_file(buf)) == gs


def test_file_reports_line():
    with pytest.raises(Graph6Error, match="line 2"):
        list(read_file(io.StringIO("C~\nC\n")))
