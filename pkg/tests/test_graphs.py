"""Graph container, graph6 codec, and JSON interchange."""
from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graph_strategy, nx_isomorphic, to_nx
from gsnkit.graphs import (
    Graph,
    GraphError,
    check_strongly_regular,
    encode_graph6,
    graph_from_edges,
    graph_to_json,
    parse_graph6,
    parse_json_graph,
    parse_json_graphs,
)


def test_basic_accessors():
    G = Graph(4, ((0, 1), (1, 2), (2, 3)))
    assert G.n == 4
    assert G.has_edge(1, 0) and not G.has_edge(0, 2)
    assert G.degree(1) == 2
    assert G.neighbors[0] == (1,)


def test_edges_normalized_and_duplicates_rejected():
    G = graph_from_edges(3, [(2, 1), (1, 0)])
    assert G.edges == ((0, 1), (1, 2))
    with pytest.raises(GraphError):
        graph_from_edges(3, [(1, 0), (0, 1)])


def test_rejects_loops_and_out_of_range():
    with pytest.raises(GraphError):
        Graph(3, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 3),))


def test_vertex_label_length_checked():
    with pytest.raises(GraphError):
        Graph(3, (), vertex_labels=(1, 2))


def test_edge_label_must_reference_edge():
    with pytest.raises(GraphError):
        Graph(3, ((0, 1),), edge_labels=(((1, 2), 5),))


@given(graph_strategy(max_n=9))
@settings(max_examples=60, deadline=None)
def test_permute_preserves_structure(G):
    perm = list(reversed(range(G.n)))
    H = G.permute(perm)
    assert H.n == G.n
    for u, v in G.edges:
        assert H.has_edge(perm[u], perm[v])
    assert len(H.edges) == len(G.edges)


@given(graph_strategy(max_n=8))
@settings(max_examples=40, deadline=None)
def test_complement_involution(G):
    assert G.complement().complement().edges == G.edges


def test_delete_vertex_matches_networkx():
    G = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)))
    H = G.delete_vertex(2)
    g = to_nx(G)
    g.remove_node(2)
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    assert nx_isomorphic(H, Graph(4, tuple(g.edges())))


# ── graph6 ────────────────────────────────────────────────────────────

@given(graph_strategy(min_n=0, max_n=12))
@settings(max_examples=80, deadline=None)
def test_graph6_round_trip(G):
    text = encode_graph6(G)
    back = parse_graph6(text)[0]
    assert back.n == G.n and back.edges == G.edges


@given(graph_strategy(min_n=1, max_n=10))
@settings(max_examples=40, deadline=None)
def test_graph6_agrees_with_networkx_codec(G):
    ours = encode_graph6(G)
    theirs = nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
    assert ours == theirs
    back = parse_graph6(theirs)[0]
    assert back.edges == G.edges


def test_graph6_multi_record_and_headers():
    payload = ">>graph6<<D?{\nDQo\n"
    graphs = parse_graph6(payload)
    assert [g.n for g in graphs] == [5, 5]


def test_graph6_rejects_garbage():
    with pytest.raises(GraphError):
        parse_graph6("D?\x01")
    with pytest.raises(GraphError):
        parse_graph6("D")  # truncated record


def test_graph6_size_cap():
    big = nx.to_graph6_bytes(nx.empty_graph(200), header=False).decode()
    with pytest.raises(GraphError):
        parse_graph6(big, n_cap=100)


# ── JSON interchange ─────────────────────────────────────────────────

def test_json_round_trip_with_labels():
    G = Graph(3, ((0, 1), (1, 2)), vertex_labels=(7, 8, 9),
              edge_labels=(((0, 1), 1), ((1, 2), 2)), name="tri-path")
    back = parse_json_graph(graph_to_json(G))
    assert back == G
    assert back.name == "tri-path"


def test_json_array_and_single_object():
    single = '{"n": 2, "edges": [[0, 1]]}'
    arr = f"[{single}, {single}]"
    assert len(parse_json_graphs(single)) == 1
    assert len(parse_json_graphs(arr)) == 2


def test_json_rejects_malformed():
    with pytest.raises(GraphError):
        parse_json_graph("{not json")
    with pytest.raises(GraphError):
        parse_json_graph('{"edges": [[0, 1]]}')  # missing n
    with pytest.raises(GraphError):
        parse_json_graph('{"n": 2, "edges": [[0, 5]]}')


# ── strongly regular check ───────────────────────────────────────────

def test_check_strongly_regular_on_c5():
    params = check_strongly_regular(Graph(5, ((0, 1), (1, 2), (2, 3),
                                              (3, 4), (4, 0))))
    assert params is not None
    assert (params.n, params.d, params.lam, params.mu) == (5, 2, 0, 1)


def test_check_strongly_regular_rejects_path():
    assert check_strongly_regular(Graph(3, ((0, 1), (1, 2)))) is None
