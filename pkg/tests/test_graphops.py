import pyheavy.graphops as graphops
from pyheavy.graphops import Graph, Graph6Error, GraphError
from pyheavy.families import (
    complete_graph, cycle_graph, enumerate_labeled, path_graph, petersen)

import networkx as nx
import numpy as np
import pytest

from itertools import combinations


def random_graphs(count=10, n=8, p=0.4):
    return [
        graphops.from_networkx(nx.gnp_random_graph(n, p, seed=seed))
        for seed in range(count)
    ]


def test_bitset_helpers():
    bits = graphops.bitset([0, 3, 5])
    assert bits == 0b101001
    assert graphops.members(bits) == [0, 3, 5]
    assert list(graphops.iter_bits(0)) == []
    assert graphops.popcount(bits) == 3


def test_build_graph_collapses_duplicates():
    graph = graphops.build_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert graph.edge_count == 2
    assert graph.edges() == [(0, 1), (1, 2)]
    assert graph.non_edges() == [(0, 2)]
    assert graph.degrees == (1, 2, 1)


@pytest.mark.parametrize('n, edges', [
    (3, [(0, 0)]),
    (3, [(0, 3)]),
    (65, []),
    (-1, []),
])
def test_build_graph_rejects(n, edges):
    with pytest.raises(GraphError):
        graphops.build_graph(n, edges)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph([0b10, 0b00])
    with pytest.raises(GraphError):
        Graph([0b01])


def test_vertex_range_is_checked():
    graph = path_graph(3)
    with pytest.raises(GraphError):
        graph.degree(3)
    with pytest.raises(GraphError):
        graph.has_edge(-1, 0)


def test_add_edges_returns_new_graph():
    graph = path_graph(3)
    bigger = graph.add_edges([(0, 2)])
    assert graph.edge_count == 2
    assert bigger.edge_count == 3
    assert bigger == complete_graph(3)
    assert hash(bigger) == hash(complete_graph(3))
    with pytest.raises(GraphError):
        graph.add_edges([(1, 1)])


def test_complement_of_c5_is_c5():
    c5 = cycle_graph(5)
    assert nx.is_isomorphic(
        graphops.to_networkx(graphops.complement(c5)),
        graphops.to_networkx(c5))
    assert graphops.complement(complete_graph(4)).edge_count == 0


def test_induced_subgraph_relabels():
    graph = path_graph(4)
    sub = graphops.induced_subgraph(graph, graphops.bitset([1, 2, 3]))
    assert sub.n == 3
    assert sub.edges() == [(0, 1), (1, 2)]


def test_disjoint_union():
    union = graphops.disjoint_union(complete_graph(3), path_graph(2))
    assert union.n == 5
    assert union.edges() == [(0, 1), (0, 2), (1, 2), (3, 4)]
    assert graphops.connected_components(union) == [0b00111, 0b11000]
    assert not graphops.is_connected(union)


def test_two_connectivity():
    assert graphops.is_two_connected(cycle_graph(5))
    assert not graphops.is_two_connected(path_graph(5))
    assert not graphops.is_two_connected(complete_graph(2))
    assert graphops.is_nonseparable(complete_graph(2).adj, 0b11)


def removal_connected(nxg):
    """Brute force: order at least 3, connected, and connected after
    deleting any single vertex."""
    nodes = list(nxg.nodes)
    return (len(nodes) >= 3 and nx.is_connected(nxg) and all(
        nx.is_connected(nxg.subgraph([u for u in nodes if u != v]))
        for v in nodes))


@pytest.mark.parametrize('n', range(1, 7))
def test_two_connectivity_exhaustive(n):
    for graph in enumerate_labeled(n):
        assert graphops.is_two_connected(graph) \
            == removal_connected(graphops.to_networkx(graph)), \
            graphops.write_graph6(graph)


def test_distance():
    graph = path_graph(5)
    assert graphops.distance(graph, 0, 4) == 4
    assert graphops.distance(graph, 2, 2) == 0
    union = graphops.disjoint_union(graph, path_graph(1))
    assert graphops.distance(union, 0, 5) is None


@pytest.mark.parametrize('graph', random_graphs() + [petersen()])
def test_against_networkx(graph):
    nxg = graphops.to_networkx(graph)
    cliques = sorted(sorted(c) for c in nx.find_cliques(nxg))
    assert [graphops.members(c) for c in graphops.maximal_cliques(graph)] \
        == cliques
    assert len(graphops.connected_components(graph)) \
        == nx.number_connected_components(nxg)
    assert graphops.is_two_connected(graph) == nx.is_biconnected(nxg)
    lengths = dict(nx.all_pairs_shortest_path_length(nxg))
    for u, v in combinations(range(graph.n), 2):
        assert graphops.distance(graph, u, v) == lengths[u].get(v)
    assert graphops.from_networkx(nxg) == graph


def test_is_clique():
    graph = complete_graph(4)
    assert graphops.is_clique(graph.adj, 0b1111)
    assert not graphops.is_clique(path_graph(3).adj, 0b111)
    assert graphops.is_clique(path_graph(3).adj, 0)


def test_from_edge_code():
    pairs = graphops.pair_list(3)
    assert pairs == [(0, 1), (0, 2), (1, 2)]
    assert graphops.from_edge_code(3, 0b101) == graphops.build_graph(
        3, [(0, 1), (1, 2)])


# graph6

def test_write_graph6_triangle():
    assert graphops.write_graph6(complete_graph(3)) == 'Bw'
    assert graphops.write_graph6(graphops.build_graph(0)) == '?'


@pytest.mark.parametrize('graph', [
    petersen(),
    cycle_graph(7),
    graphops.build_graph(1),
    complete_graph(63),
    path_graph(64),
])
def test_graph6_roundtrip(graph):
    text = graphops.write_graph6(graph)
    assert graphops.parse_graph6(text) == graph
    assert nx.from_graph6_bytes(text.encode()).number_of_edges() \
        == graph.edge_count


def test_graph6_roundtrip_random():
    rng = np.random.default_rng(2024)
    for i in range(10000):
        n = int(rng.integers(0, 33))
        pairs = graphops.pair_list(n)
        keep = rng.random(len(pairs)) < rng.random()
        graph = graphops.build_graph(
            n, [pair for pair, k in zip(pairs, keep) if k])
        text = graphops.write_graph6(graph)
        assert graphops.parse_graph6(text) == graph, text
        if i % 20 == 0:
            assert nx.to_graph6_bytes(
                graphops.to_networkx(graph), header=False
            ).decode().strip() == text


def test_parse_graph6_header_and_whitespace():
    assert graphops.parse_graph6('>>graph6<<Bw\n') == complete_graph(3)


@pytest.mark.parametrize('text, offset', [
    ('', 0),
    ('B!', 1),
    ('Bww', 2),
    ('B', 1),
    ('~?@@', 0),
    ('~?', 2),
    ('Bx', 1),
    ('D?@', 2),
    ('>>graph6<<D?@', 12),
])
def test_parse_graph6_errors(text, offset):
    with pytest.raises(Graph6Error) as info:
        graphops.parse_graph6(text)
    assert info.value.offset == offset
