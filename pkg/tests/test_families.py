import pyheavy.families as families
from pyheavy.closure import closure
from pyheavy.families import (
    FamilyClaimError, FamilyError, Predicate, complete_graph, cycle_graph,
    gen_G1, gen_G2, gen_G3, gen_G4, gen_L1, gen_L2, gen_P_family, petersen)
from pyheavy.heavy import heavy_pairs, is_claw_o_heavy
from pyheavy.patterns import is_S_free

import numpy as np
import pytest


def claims(family):
    return {c.text: c.holds for c in families.family_claims(family)}


def test_named_graphs():
    assert complete_graph(5).edge_count == 10
    assert families.empty_graph(4).edge_count == 0
    assert families.path_graph(4).edge_count == 3
    assert cycle_graph(6).degrees == (2,) * 6
    assert families.complete_bipartite(2, 3).edge_count == 6
    assert families.wheel(5).degrees == (5, 3, 3, 3, 3, 3)
    assert petersen().degrees == (3,) * 10
    with pytest.raises(FamilyError):
        cycle_graph(2)
    with pytest.raises(FamilyError):
        families.wheel(2)


def test_pad_with_isolated():
    padded = families.pad_with_isolated(cycle_graph(4))
    assert padded.n == 8
    assert padded.edge_count == 4
    assert not heavy_pairs(padded)
    assert families.pad_with_isolated(cycle_graph(4), 1).n == 5


@pytest.mark.parametrize('family, order', [
    (gen_P_family(3, 3, 3), 9),
    (gen_P_family('T', 4, 5), 12),
    (gen_L1(), 9),
    (gen_L2(), 9),
])
def test_obstruction_family(family, order):
    assert family.graph.n == order
    assert all(claims(family).values())


def test_obstruction_family_labels():
    family = gen_P_family('t', 4, 3)
    assert family.params == (('x1', 'T'), ('x2', 4), ('x3', 3))
    assert family.title == 'P(x1=T,x2=4,x3=3)'
    graph = family.graph
    assert graph.has_edge(family.vertex('a1'), family.vertex('b1'))
    assert graph.has_edge(family.vertex('t1'), family.vertex('b1'))
    assert graph.has_edge(family.vertex('p2_2'), family.vertex('b2'))
    assert not graph.has_edge(family.vertex('a2'), family.vertex('b2'))
    with pytest.raises(FamilyError):
        family.vertex('t2')


@pytest.mark.parametrize('args', [(2, 3, 3), ('X', 3, 3), (None, 3, 3)])
def test_obstruction_family_errors(args):
    with pytest.raises(FamilyError):
        gen_P_family(*args)


def test_G1():
    family = gen_G1(3)
    assert family.graph.n == 10
    result = claims(family)
    assert result['claw-o-heavy']
    assert result['Z2-c-heavy']
    assert not result['closure merges K + a1,a2,a3,b1,b2 into one maximal '
                      'clique']
    assert closure(gen_G1(5).graph).graph == complete_graph(14)
    with pytest.raises(FamilyError):
        gen_G1(2)


@pytest.mark.parametrize('k, r', [(5, 8), (6, 9)])
def test_G2_drawn(k, r):
    family = gen_G2(k, r, verify=True)
    assert family.graph.n == r + 2 * k + 7
    assert family.variant == 'drawn'
    assert all(claims(family).values())


def test_G2_literal():
    family = gen_G2(5, 8, 'literal')
    assert family.graph.n == 26
    assert not is_claw_o_heavy(family.graph)


@pytest.mark.parametrize('args', [(5, 7), (5, 9), (5, 8, 'other')])
def test_G2_errors(args):
    with pytest.raises(FamilyError):
        gen_G2(*args)


def test_G3():
    family = gen_G3(2, 12, verify=True)
    assert family.graph.n == 12 + 4 * 3 + 2
    assert all(claims(family).values())
    small = gen_G3(2, 8)
    assert not claims(small)['claw-o-heavy']
    assert is_S_free(small.graph, 'N112')
    with pytest.raises(FamilyClaimError):
        gen_G3(2, 8, verify=True)
    literal = gen_G3(2, 8, 'literal')
    assert literal.graph.has_edge(literal.vertex('a2'), literal.vertex('b2'))


@pytest.mark.parametrize('args', [(1, 8), (2, 7), (2, 8, 'other')])
def test_G3_errors(args):
    with pytest.raises(FamilyError):
        gen_G3(*args)


def test_G4():
    family = gen_G4(8)
    assert family.graph.n == 18
    result = claims(family)
    assert result['claw-o-heavy']
    assert result['H-free']
    with pytest.raises(FamilyError):
        gen_G4(7)


def test_build_family():
    built = families.build_family('cycle', n=5)
    assert built.graph == cycle_graph(5)
    assert built.labels['3'] == 3
    assert built.to_dict() == {
        'family': 'cycle', 'params': {'n': 5}, 'variant': None, 'order': 5}
    assert families.build_family('G2', k=5, r=8).graph \
        == gen_G2(5, 8).graph
    assert families.build_family('petersen').graph == petersen()


@pytest.mark.parametrize('name, params', [
    ('nope', {}),
    ('G1', {'x': 3}),
    ('G1', {}),
    ('cycle', {'n': 2}),
])
def test_build_family_errors(name, params):
    with pytest.raises(FamilyError):
        families.build_family(name, **params)


@pytest.mark.parametrize('text, graph, expected', [
    ('2-connected & claw-free', cycle_graph(5), True),
    ('!hamiltonian', petersen(), True),
    ('non-hamiltonian', cycle_graph(5), False),
    ('order>=5 and complete', complete_graph(5), True),
    ('order==4', complete_graph(5), False),
    ('connected ∧ claw-o-heavy', families.complete_bipartite(2, 3), False),
    ('N-p-heavy', cycle_graph(5), True),
    ('', families.empty_graph(3), True),
])
def test_predicate(text, graph, expected):
    assert Predicate(text)(graph) is expected


@pytest.mark.parametrize('text', ['bogus', 'order>x', 'Q7-free'])
def test_predicate_errors(text):
    with pytest.raises(FamilyError):
        Predicate(text)


def test_enumerate_labeled():
    assert len(list(families.enumerate_labeled(3))) == 8
    assert len(list(families.enumerate_labeled(4))) == 64
    assert len(list(families.enumerate_labeled(4, '2-connected'))) == 10
    assert list(families.enumerate_labeled(2, 'hamiltonian')) == []
    assert len(list(families.enumerate_up_to(3))) == 1 + 2 + 8
    with pytest.raises(FamilyError):
        list(families.enumerate_labeled(8))


def test_random_graph():
    rng = np.random.default_rng(0)
    assert families.random_graph(6, 1.0, rng) == complete_graph(6)
    assert families.random_graph(6, 0.0, rng).edge_count == 0


def test_sampler_is_reproducible():
    sampler = families.sample_filtered((5, 8), (0.3, 0.7), seed=3, count=5)
    first = list(sampler)
    assert len(first) == 5
    assert sampler.attempts == sampler.accepted == 5
    assert list(sampler) == first
    assert all(5 <= g.n <= 8 for g in first)
    assert sampler.describe()['accepted'] == 5


def test_sampler_filter_and_budget():
    sampler = families.sample_filtered(
        6, 0.5, predicate='order>=99', budget=20)
    assert list(sampler) == []
    assert sampler.attempts == 20
    assert sampler.acceptance_rate == 0.0
    assert 'no graph satisfied' in sampler.diagnostic
    with pytest.raises(FamilyError):
        families.sample_filtered(6, 0.5, budget=0)


def test_p_family_grid():
    grid = families.p_family_grid(9)
    assert [f.title for f in grid] == [
        'P(x1=T,x2=T,x3=T)', 'P(x1=T,x2=T,x3=3)',
        'P(x1=T,x2=3,x3=3)', 'P(x1=3,x2=3,x3=3)']
    assert all(f.graph.n <= 12 for f in families.p_family_grid(12))
