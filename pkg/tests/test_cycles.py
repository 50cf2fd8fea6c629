import pyheavy.cycles as cycles
from pyheavy.cycles import CycleCertificate, OracleLimitError
from pyheavy.families import (
    complete_bipartite, complete_graph, cycle_graph, enumerate_labeled,
    gen_L1, path_graph, petersen)
from pyheavy.graphops import build_graph, disjoint_union, from_networkx

import networkx as nx
import numpy as np
import pytest


def test_petersen():
    graph = petersen()
    value, certificate = cycles.is_hamiltonian(graph)
    assert value is False
    assert certificate is None
    length, cycle = cycles.circumference(graph)
    assert length == 9
    assert cycle.length == 9
    assert cycle.is_valid(graph)


@pytest.mark.parametrize('n', range(3, 8))
def test_complete_graphs(n):
    graph = complete_graph(n)
    value, certificate = cycles.is_hamiltonian(graph)
    assert value
    assert certificate.length == n
    assert certificate.is_valid(graph)
    assert cycles.circumference(graph).value == n


@pytest.mark.parametrize('graph, hamiltonian, length', [
    (cycle_graph(7), True, 7),
    (path_graph(5), False, 0),
    (complete_graph(2), False, 0),
    (complete_bipartite(2, 3), False, 4),
    (complete_bipartite(3, 3), True, 6),
    (disjoint_union(complete_graph(3), cycle_graph(4)), False, 4),
    (gen_L1().graph, False, 8),
])
def test_known_graphs(graph, hamiltonian, length):
    assert bool(cycles.is_hamiltonian(graph).value) is hamiltonian
    value, cycle = cycles.circumference(graph)
    assert value == length
    if length:
        assert cycle.is_valid(graph) and cycle.length == length
    else:
        assert cycle is None


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_against_permutation_search(n):
    for graph in enumerate_labeled(n):
        value, certificate = cycles.is_hamiltonian(graph)
        assert bool(value) == cycles.naive_is_hamiltonian(graph)
        assert cycles.circumference(graph).value \
            == cycles.naive_circumference(graph)


def atlas_graphs(order):
    return [from_networkx(g) for g in nx.graph_atlas_g()
            if g.number_of_nodes() == order]


def test_against_permutation_search_order_seven():
    """Every graph of order 7 up to isomorphism, under a random labelling."""
    rng = np.random.default_rng(7)
    for graph in atlas_graphs(7):
        perm = rng.permutation(7)
        graph = build_graph(
            7, [(int(perm[u]), int(perm[v])) for u, v in graph.edges()])
        value, certificate = cycles.is_hamiltonian(graph)
        assert bool(value) == cycles.naive_is_hamiltonian(graph)
        if value:
            assert certificate.length == 7 and certificate.is_valid(graph)
        length, cycle = cycles.circumference(graph)
        assert length == cycles.naive_circumference(graph)
        if length:
            assert cycle.length == length and cycle.is_valid(graph)


def test_vectorised_table_agrees(monkeypatch):
    graphs = atlas_graphs(6) + [petersen(), gen_L1().graph]
    expected = [(bool(cycles.is_hamiltonian(g).value),
                 cycles.circumference(g).value) for g in graphs]
    monkeypatch.setattr(cycles, 'VECTOR_MIN_SIZE', 0)
    for graph, (hamiltonian, length) in zip(graphs, expected):
        value, certificate = cycles.is_hamiltonian(graph)
        assert bool(value) is hamiltonian
        if value:
            assert certificate.is_valid(graph)
        value, cycle = cycles.circumference(graph)
        assert value == length
        if length:
            assert cycle.is_valid(graph) and cycle.length == length


@pytest.mark.parametrize('graph, hamiltonian, length', [
    (complete_graph(18), True, 18),
    (cycle_graph(20), True, 20),
    (disjoint_union(complete_graph(9), complete_graph(10)), False, 10),
    (complete_bipartite(9, 10), False, 18),
])
def test_large_tables(graph, hamiltonian, length):
    value, certificate = cycles.is_hamiltonian(graph)
    assert bool(value) is hamiltonian
    if value:
        assert certificate.length == graph.n
        assert certificate.is_valid(graph)
    value, cycle = cycles.circumference(graph)
    assert value == length
    assert cycle.is_valid(graph)


def test_hamiltonian_of_large_complete_graph(monkeypatch):
    monkeypatch.delenv('PYHEAVY_MAX_HAMILTONIAN_ORDER', raising=False)
    graph = complete_graph(22)
    value, certificate = cycles.is_hamiltonian(graph)
    assert value
    assert certificate.length == 22 and certificate.is_valid(graph)


def test_certificate_validity():
    graph = cycle_graph(5)
    assert CycleCertificate((0, 1, 2, 3, 4)).is_valid(graph)
    assert not CycleCertificate((0, 1, 2, 4, 3)).is_valid(graph)
    assert not CycleCertificate((0, 1, 0)).is_valid(graph)
    assert not CycleCertificate((0, 1)).is_valid(graph)


def test_order_cap():
    with pytest.raises(OracleLimitError):
        cycles.is_hamiltonian(complete_graph(10), max_order=5)
    with pytest.raises(OracleLimitError):
        cycles.circumference(complete_graph(10), max_order=9)
    assert cycles.is_hamiltonian(complete_graph(10), max_order=10).value


def test_order_cap_from_environment(monkeypatch):
    monkeypatch.setenv('PYHEAVY_MAX_HAMILTONIAN_ORDER', '4')
    monkeypatch.setenv('PYHEAVY_MAX_CIRCUMFERENCE_ORDER', '3')
    assert cycles.max_order('hamiltonian') == 4
    assert cycles.max_order('circumference', 12) == 12
    with pytest.raises(OracleLimitError):
        cycles.is_hamiltonian(complete_graph(5))
    with pytest.raises(OracleLimitError):
        cycles.circumference(complete_graph(4))
    with pytest.raises(ValueError):
        cycles.max_order('girth')


def test_default_order_caps(monkeypatch):
    monkeypatch.delenv('PYHEAVY_MAX_HAMILTONIAN_ORDER', raising=False)
    monkeypatch.delenv('PYHEAVY_MAX_CIRCUMFERENCE_ORDER', raising=False)
    assert cycles.max_order('hamiltonian') == 24
    assert cycles.max_order('circumference') == 20


def test_classical_conditions():
    report = cycles.dirac_ore_fan_sanity(complete_graph(5))
    assert report.applies == {'dirac': True, 'ore': True, 'fan': True}
    assert report.hamiltonian is True
    assert report.violations == []
    assert report.certificate.is_valid(complete_graph(5))

    report = cycles.dirac_ore_fan_sanity(cycle_graph(6))
    assert not any(report.applies.values())
    assert report.hamiltonian is None
    assert report.to_dict()['violations'] == []

    k23 = complete_bipartite(2, 3)
    assert not any(cycles.dirac_ore_fan_sanity(k23).applies.values())


def test_fan_without_ore():
    # K4 with two light vertices at distance three
    graph = build_graph(6, [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
        (4, 0), (4, 1), (5, 2), (5, 3)])
    report = cycles.dirac_ore_fan_sanity(graph)
    assert report.applies['fan']
    assert not report.applies['ore']
    assert report.hamiltonian
