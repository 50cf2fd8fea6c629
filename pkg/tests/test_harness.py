import pyheavy.harness as harness
from pyheavy.families import cycle_graph, gen_G1, gen_G2
from pyheavy.graphops import write_graph6
from pyheavy.harness import Corpus, VerificationReport, Violation
from pyheavy.suites import SuiteError, get_suite

import pytest

import dataclasses
import pickle


@pytest.mark.parametrize('suite, n_max', [
    ('oracles', 5),
    ('closure-basics', 5),
    ('minimal-supergraph', 4),
    ('regions', 5),
    ('stability', 4),
    ('implications', 4),
    ('pattern-order', 4),
    ('padding', 4),
    ('classical', 4),
])
def test_exhaustive_suites_pass(suite, n_max):
    corpus = harness.build_corpus(suite, n_max=n_max, explicit=False)
    report = harness.run_suite(suite, corpus)
    assert report.status == 'passed', report.summary()
    assert report.graphs > 0
    assert report.skipped == 0


def test_oracle_corpus_counts():
    report = harness.run_suite('oracles', Corpus(n_max=4))
    assert report.graphs == 1 + 2 + 8 + 64
    assert report.counts['hamiltonicity agrees with permutation search'] \
        == report.graphs
    assert report.corpus == {
        'exhaustive': {'n_min': 1, 'n_max': 4, 'predicate': None}}


def test_corpus_order_limit():
    with pytest.raises(ValueError):
        Corpus(n_max=8)


def test_build_corpus_respects_suite():
    corpus = harness.build_corpus('main-theorem', n_max=5)
    assert corpus.n_max is None
    assert corpus.explicit
    assert not corpus.sampled
    corpus = harness.build_corpus('regions', n_max=9, samples=2, seed=1)
    assert corpus.n_max == 7
    assert corpus.sampled
    assert corpus.sampler.budget == 400
    with pytest.raises(SuiteError):
        harness.build_corpus('nope')


def test_sampled_run_below_floor_is_inconclusive():
    corpus = harness.build_corpus('stability', samples=3, orders=(5, 6))
    report = harness.run_suite('stability', corpus, minimum=100)
    assert report.inconclusive
    assert report.status in ('inconclusive', 'failed')
    assert report.corpus['sampled']['accepted'] <= 3


def test_status():
    report = VerificationReport('oracles', {})
    assert report.status == 'passed'
    assert report.passed
    report.violations.append(Violation('Bw', 'x', 'y', report_only=True))
    assert report.status == 'passed'
    report.inconclusive.append('x')
    assert report.status == 'inconclusive'
    report.violations.append(Violation('Bw', 'x', 'y'))
    assert report.status == 'failed'
    assert len(report.failures) == 1


def test_report_json_roundtrip():
    corpus = Corpus(explicit=[gen_G1(3).graph])
    report = harness.run_suite('families', corpus)
    assert report.violations
    assert report.status == 'passed'
    data = report.to_dict()
    assert data['status'] == 'passed'
    again = VerificationReport.from_json(report.to_json())
    assert again == report


def test_summary():
    corpus = Corpus(explicit=[gen_G1(3).graph])
    report = harness.run_suite('families', corpus)
    text = report.summary()
    assert text.startswith('families: PASSED')
    assert '[report only]' in text
    assert write_graph6(gen_G1(3).graph) in text


def test_recheck():
    corpus = Corpus(explicit=[gen_G1(3).graph])
    report = harness.run_suite('families', corpus)
    assert harness.recheck(report) == []
    stale = Violation(write_graph6(cycle_graph(5)), 'G1: claw-o-heavy', 'x')
    report.violations.append(stale)
    assert harness.recheck(report) == [stale]


def test_workers_keep_corpus_order():
    corpus = harness.build_corpus('regions', n_max=4, explicit=False)
    serial = harness.run_suite('regions', corpus, workers=1)
    parallel = harness.run_suite('regions', corpus, workers=3)
    assert serial.counts == parallel.counts
    assert serial.violations == parallel.violations
    assert serial.graphs == parallel.graphs


def test_worker_processes_run_oracles():
    corpus = Corpus(n_max=4)
    serial = harness.run_suite('oracles', corpus, workers=1)
    parallel = harness.run_suite('oracles', corpus, workers=2)
    assert parallel.counts == serial.counts
    assert parallel.violations == serial.violations == []


def test_graphs_pickle():
    graph = gen_G2(5, 8).graph
    copy = pickle.loads(pickle.dumps(graph))
    assert copy == graph
    assert write_graph6(copy) == write_graph6(graph)


def test_unregistered_suite_runs_serially():
    registered = get_suite('regions')
    suite = dataclasses.replace(
        registered, check=lambda graph: registered.check(graph))
    corpus = Corpus(n_max=3)
    report = harness.run_suite(suite, corpus, workers=2)
    assert report.counts == harness.run_suite('regions', corpus).counts


def test_skips_graphs_above_oracle_cap(monkeypatch):
    monkeypatch.setenv('PYHEAVY_MAX_HAMILTONIAN_ORDER', '4')
    report = harness.run_suite('oracles', Corpus(explicit=[cycle_graph(6)]))
    assert report.skipped == 1
    assert report.applicable == 0


def test_configuration(monkeypatch):
    monkeypatch.setenv('PYHEAVY_MIN_INSTANCES', '7')
    monkeypatch.setenv('PYHEAVY_WORKERS', '0')
    assert harness.min_instances() == 7
    assert harness.min_instances(3) == 3
    assert harness.default_workers() == 1
    assert harness.default_workers(4) == 4
    monkeypatch.delenv('PYHEAVY_MIN_INSTANCES')
    assert harness.min_instances() == 100


def test_verify():
    report = harness.verify('oracles', n_max=3, explicit=False)
    assert report.suite == 'oracles'
    assert report.graphs == 1 + 2 + 8


def test_hunt():
    witness = gen_G2(5, 8).graph
    found = harness.hunt('closure-preserves-N-c-heavy',
                         seeds=[cycle_graph(6), witness])
    assert [v.graph6 for v in found] == [write_graph6(witness)]
    assert found[0].graph() == witness
    assert harness.hunt('closure-preserves-N-c-heavy',
                        seeds=[cycle_graph(6), witness], budget=1) == []
    with pytest.raises(ValueError):
        harness.hunt('closure-preserves-N-c-heavy', budget=0)
    with pytest.raises(SuiteError):
        harness.hunt('nope')
