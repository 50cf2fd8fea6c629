import pyheavy.suites as suites
from pyheavy.families import (
    complete_graph, cycle_graph, gen_G1, gen_G2, gen_L1, gen_L2,
    gen_P_family, petersen, wheel)
from pyheavy.graphops import build_graph
from pyheavy.suites import (
    COVERAGE, HUNT_PREDICATES, SUITES, Outcome, StabilityEntry, SuiteError)

import pytest


DIAMOND = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
PAW = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])

SMALL_GRAPHS = [DIAMOND, PAW, cycle_graph(5), complete_graph(4), wheel(5)]


def failures(outcomes):
    return [o for o in outcomes if o.failed and not o.report_only]


def test_outcome():
    assert not Outcome('x').failed
    assert Outcome('x', 'broken').failed


@pytest.mark.parametrize('name', sorted(COVERAGE))
def test_coverage_points_to_assertions(name):
    suite_name, assertion = COVERAGE[name]
    suite = SUITES[suite_name]
    if assertion is not None:
        assert assertion in suite.assertions


@pytest.mark.parametrize('name', [
    name for name, suite in SUITES.items() if suite.assertions])
def test_checks_report_declared_assertions(name):
    suite = SUITES[name]
    for graph in SMALL_GRAPHS:
        for outcome in suite.check(graph):
            assert outcome.assertion in suite.assertions
            assert not outcome.failed or outcome.report_only


def test_floor_assertions_are_declared():
    for suite in SUITES.values():
        assert set(suite.floor_assertions) <= set(suite.assertions)


def test_get_suite():
    assert suites.get_suite('regions').name == 'regions'
    with pytest.raises(SuiteError):
        suites.get_suite('nope')
    with pytest.raises(SuiteError):
        suites.get_hunt_predicate('nope')


def test_closure_basics_out_of_scope():
    assert suites.check_closure_basics(petersen()) == []


def test_closure_basics_on_wheel():
    outcomes = suites.check_closure_basics(wheel(5))
    names = {o.assertion for o in outcomes}
    assert 'c-closure order independent' in names
    assert 'r-closure K112-free' in names
    assert not failures(outcomes)


@pytest.mark.parametrize('entry, text', [
    (StabilityEntry('P6', 'c', 'step'),
     'P6-c-heavy kept by each completion'),
    (StabilityEntry('P5', 'c', 'free'),
     'P5-c-heavy gives c-closure without P5'),
    (StabilityEntry('Z1', 'c', 'kept'), 'Z1-c-heavy kept by c-closure'),
    (StabilityEntry('Z2', 'c', 'kept', probe=True),
     'Z2-c-heavy kept by c-closure (probe)'),
    (StabilityEntry('P4', 'free', 'kept', 'r', True),
     'P4-free kept by r-closure (probe)'),
    (StabilityEntry('N', 'p', 'step'), 'N-p-heavy kept by each completion'),
])
def test_stability_assertions(entry, text):
    assert entry.assertion == text


def test_stability_probe_on_G2():
    outcomes = suites.check_stability(gen_G2(5, 8).graph)
    probe = [o for o in outcomes
             if o.assertion == 'N-c-heavy kept by c-closure (probe)']
    assert len(probe) == 1
    assert probe[0].failed and probe[0].report_only


def test_main_assertion():
    assert suites.main_assertion('N', 'p') \
        == 'hamiltonian: claw-o-heavy N-p-heavy'
    assert suites.main_assertion('P6') \
        in SUITES['main-theorem'].floor_assertions


def test_main_theorem_on_complete_graphs():
    check = suites.make_main_theorem_check()
    outcomes = check(complete_graph(12))
    assert {o.assertion for o in outcomes} == set(suites.MAIN_ASSERTIONS)
    assert not failures(outcomes)
    assert check(cycle_graph(4)) == []


def test_main_theorem_counts_S_free_graphs():
    """C12 contains no triangle, so every triangle pattern counts."""
    outcomes = suites.make_main_theorem_check()(cycle_graph(12))
    names = {o.assertion for o in outcomes}
    assert names == {suites.main_assertion(s)
                     for s in ('Z1', 'Z2', 'Z3', 'B', 'N', 'W')} \
        | {suites.main_assertion('N', 'p')}
    assert not failures(outcomes)


# K4 joined to a net on 0..5; every vertex is heavy
NET_JOIN_K4 = build_graph(10, [
    (0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5),
] + [(k, v) for k in range(6, 10) for v in range(k)])


def test_main_theorem_tallies_graphs_with_a_copy():
    outcomes = suites.make_main_theorem_check()(NET_JOIN_K4)
    names = {o.assertion for o in outcomes}
    for pattern in ('N', 'P4'):
        assertion = suites.main_assertion(pattern)
        assert assertion in names
        assert suites.with_copy(assertion, pattern) in names
    assert not failures(outcomes)
    floors = SUITES['main-theorem'].floor_assertions
    assert not set(suites.MAIN_WITH_COPY_ASSERTIONS) & set(floors)


def test_main_theorem_diagnostic_is_report_only():
    check = suites.make_main_theorem_check(min_order=3, report_only=True)
    outcomes = check(gen_P_family(3, 3, 3).graph)
    assert all(o.report_only for o in outcomes)


def test_heavy_pair_rule_text():
    rule = suites.HeavyPairRule('f', 'Z3', 'f', 10)
    assert rule.assertion == 'hamiltonian: claw-f-heavy Z3-f-heavy (n >= 10)'
    assert suites.HeavyPairRule('o', 'N', 'f').assertion \
        == 'hamiltonian: claw-o-heavy N-f-heavy'


@pytest.mark.parametrize('graph', [gen_L1().graph, gen_L2().graph])
def test_forbidden_pairs_exceptions(graph):
    outcomes = suites.check_forbidden_pairs(graph)
    assert suites.forbidden_assertion('Z3') in {o.assertion for o in outcomes}
    assert not failures(outcomes)


def test_obstruction():
    outcomes = suites.check_obstruction(gen_P_family(3, 4, 5).graph)
    assert [o.assertion for o in outcomes] \
        == list(suites.OBSTRUCTION_ASSERTIONS)
    assert not failures(outcomes)
    assert suites.check_obstruction(cycle_graph(6)) == []


@pytest.mark.parametrize('graph', SMALL_GRAPHS + [petersen()])
def test_implications_and_order(graph):
    assert not failures(suites.check_implications(graph))
    assert not failures(suites.check_pattern_order(graph))


def test_pattern_order_pairs():
    pairs = suites.pattern_order_pairs()
    assert ('P4', 'P5') in pairs
    assert ('Z1', 'B') in pairs
    assert ('C3', 'P4') not in pairs
    assert ('P5', 'P4') not in pairs


@pytest.mark.parametrize('graph', [petersen(), gen_L1().graph, DIAMOND])
def test_oracles(graph):
    outcomes = suites.check_oracles(graph)
    assert outcomes
    assert not failures(outcomes)


def test_classical():
    outcomes = suites.check_classical(complete_graph(6))
    assert len(outcomes) == 3
    assert not failures(outcomes)
    assert suites.check_classical(cycle_graph(6)) == []


def test_padding():
    outcomes = suites.check_padding(DIAMOND)
    assert len(outcomes) == 2
    assert not failures(outcomes)


def test_families_check():
    outcomes = suites.check_families(gen_G1(3).graph)
    assert outcomes
    assert all(o.report_only for o in outcomes)
    assert any(o.failed for o in outcomes)
    assert suites.check_families(cycle_graph(5)) == []


def test_hunt_predicates():
    preserves = HUNT_PREDICATES['closure-preserves-N-c-heavy']
    assert preserves(gen_G2(5, 8).graph) is not None
    assert preserves(cycle_graph(6)) is None
    assert HUNT_PREDICATES['closure-preserves-Z2-c-heavy'](
        gen_G1(3).graph) is None
    ham = HUNT_PREDICATES['c3-c-heavy-hamiltonian']
    assert ham(gen_P_family(3, 3, 3).graph) == 'not hamiltonian'
    assert ham(cycle_graph(6)) is None
    assert HUNT_PREDICATES['closure-no-heavy-pair'](DIAMOND) is None
