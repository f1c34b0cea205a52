"""graph6 and edge-list round trips and error handling."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from switchkit.errors import MalformedGraph6
from switchkit.graph import Graph
from switchkit.graphio import (
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from switchkit.patterns import complete_graph, cycle_graph


@given(st.integers(0, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << max(n * (n - 1) // 2, 1)) - 1))
))
@settings(max_examples=300)
def test_graph6_round_trip(spec):
    n, code = spec
    edges = []
    bit = 0
    for u in range(n):
        for v in range(u + 1, n):
            if code >> bit & 1:
                edges.append((u, v))
            bit += 1
    g = Graph.from_edges(n, edges)
    assert parse_graph6(emit_graph6(g)) == g


def test_agrees_with_networkx_codec():
    import networkx as nx

    for g in (
        cycle_graph(5),
        complete_graph(4),
        Graph.empty(3),
        Graph.from_edges(7, [(0, 6), (1, 2), (2, 5), (3, 4), (4, 6)]),
    ):
        s = emit_graph6(g)
        G = nx.from_graph6_bytes(s.encode())
        assert sorted(map(tuple, map(sorted, G.edges()))) == g.edges()
        back = nx.to_graph6_bytes(G, header=False).decode().strip()
        assert parse_graph6(back) == g


def test_empty_graph_string():
    assert emit_graph6(Graph.empty(0)) == "?"
    assert parse_graph6("?").n == 0


def test_header_is_stripped():
    g = cycle_graph(4)
    assert parse_graph6(">>graph6<<" + emit_graph6(g)) == g


def test_large_n_prefix():
    g = Graph.from_edges(70, [(0, 69), (5, 7)])
    s = emit_graph6(g)
    assert s.startswith(chr(126))
    assert parse_graph6(s) == g


def test_emit_parse_idempotent_on_emitted():
    g = cycle_graph(9)
    s = emit_graph6(g)
    assert emit_graph6(parse_graph6(s)) == s


@pytest.mark.parametrize(
    "bad",
    ["", "D", "D?", "D???", chr(200), "C" + chr(30), "~~~~~~"],
)
def test_malformed(bad):
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


def test_edge_list_round_trip():
    g = Graph.from_edges(6, [(0, 1), (2, 5), (3, 4)])
    assert parse_edge_list(emit_edge_list(g)) == g


def test_edge_list_bad_count():
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n")
