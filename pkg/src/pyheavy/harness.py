"""
Verification runs over corpora of graphs.

A run feeds every graph of a :class:`Corpus` to the check of a
:class:`~pyheavy.suites.Suite` and reduces the outcomes, in corpus order,
into a :class:`VerificationReport`. Reports serialize to JSON and can be
rechecked: every recorded violation is re-parsed from its graph6 string and
must fail the same assertion again.
"""

from __future__ import annotations

from pyheavy.cycles import OracleLimitError
from pyheavy.families import (
    FilteredSampler, MAX_ENUMERATION_ORDER, PredicateLike, enumerate_up_to)
from pyheavy.graphops import Graph, parse_graph6, write_graph6
from pyheavy.suites import (
    SUITES, Outcome, Suite, get_hunt_predicate, get_suite)

import jinja2
from tqdm import tqdm

import json
import logging
import os
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union


logger = logging.getLogger(__name__)

DEFAULT_MIN_INSTANCES = 100
WORKER_CHUNKSIZE = 16


def min_instances(override: Optional[int] = None) -> int:
    """Applicable graphs a sampled assertion needs to count as verified."""
    if override is not None:
        return int(override)
    return int(os.environ.get('PYHEAVY_MIN_INSTANCES', DEFAULT_MIN_INSTANCES))


def default_workers(override: Optional[int] = None) -> int:
    if override is not None:
        return max(1, int(override))
    return max(1, int(os.environ.get('PYHEAVY_WORKERS', 1)))


class _WorkerPool:

    """Worker processes for more than one worker, otherwise a serial
    stand-in with the same interface. ``imap`` keeps the input order."""

    def __new__(cls, n_workers):
        if n_workers > 1:
            from multiprocessing import Pool
            return Pool(n_workers)
        else:
            return object.__new__(cls)

    def __enter__(self):
        return self

    def __exit__(self, *exc_state):
        pass

    def imap(self, func, iterable, chunksize=1):
        return map(func, iterable)


class Corpus:

    """Graphs to run a suite on: all labelled graphs up to some order,
    random samples and explicit graphs, in this order."""

    def __init__(self, n_max: Optional[int] = None,
                 predicate: PredicateLike = None,
                 sampler: Optional[FilteredSampler] = None,
                 explicit: Iterable[Graph] = (),
                 n_min: int = 1):
        if n_max is not None and n_max > MAX_ENUMERATION_ORDER:
            raise ValueError("Exhaustive corpora stop at n = {}, got {}"
                             .format(MAX_ENUMERATION_ORDER, n_max))
        self.n_min = n_min
        self.n_max = n_max
        self.predicate = predicate
        self.sampler = sampler
        self.explicit = list(explicit)

    def __iter__(self) -> Iterator[Graph]:
        if self.n_max is not None:
            yield from enumerate_up_to(self.n_max, self.predicate, self.n_min)
        if self.sampler is not None:
            yield from self.sampler
        yield from self.explicit

    @property
    def sampled(self) -> bool:
        return self.sampler is not None

    def describe(self) -> dict:
        parts = {}
        if self.n_max is not None:
            parts['exhaustive'] = {
                'n_min': self.n_min,
                'n_max': self.n_max,
                'predicate': self.predicate if isinstance(
                    self.predicate, str) else None,
            }
        if self.sampler is not None:
            parts['sampled'] = self.sampler.describe()
        if self.explicit:
            parts['explicit'] = [write_graph6(g) for g in self.explicit]
        return parts


def build_corpus(suite: Union[str, Suite], n_max: Optional[int] = None,
                 samples: int = 0, seed: int = 0,
                 orders: Optional[Tuple[int, int]] = None,
                 p: Tuple[float, float] = (0.3, 0.9),
                 budget: Optional[int] = None,
                 explicit: bool = True) -> Corpus:
    """Default corpus of ``suite``.

    :param n_max: enumerate all labelled graphs up to this order (at most 7)
        that pass the suite filter; ignored for suites that only run on
        samples and explicit graphs
    :param samples: number of accepted random graphs
    :param budget: sampling attempts, ``200 * samples`` by default
    """
    if isinstance(suite, str):
        suite = get_suite(suite)
    sampler = None
    if samples:
        sampler = FilteredSampler(
            orders or suite.sample_orders, p, seed=seed,
            predicate=suite.sample_filter,
            budget=budget or 200 * samples, count=samples)
    return Corpus(
        n_max=min(n_max, MAX_ENUMERATION_ORDER)
        if n_max and suite.exhaustive else None,
        predicate=suite.sample_filter,
        sampler=sampler,
        explicit=suite.explicit() if explicit else (),
    )


@dataclass(frozen=True)
class Violation:

    graph6: str
    assertion: str
    detail: str
    report_only: bool = False

    def graph(self) -> Graph:
        return parse_graph6(self.graph6)


_SUMMARY = jinja2.Template("""\
{{ report.suite }}: {{ report.status | upper }}
graphs: {{ report.graphs }} drawn, {{ report.applicable }} in scope
{%- if report.skipped %}, {{ report.skipped }} above the oracle cap{% endif %}
{%- if report.corpus.sampled %}
sampler: seed {{ report.corpus.sampled.seed }}, \
{{ report.corpus.sampled.accepted }} of {{ report.corpus.sampled.attempts }} \
accepted
{%- endif %}
time: {{ '%.2f' | format(report.wall_time) }}s
{% for name, count in report.counts | dictsort %}
  {{ name }}: {{ count }}
  {%- if name in report.inconclusive %} (below {{ report.min_instances }}){% endif %}
{%- endfor %}
{% if report.violations %}
violations:
{%- for v in report.violations %}
  {{ v.graph6 }}  {{ v.assertion }}: {{ v.detail }}
  {%- if v.report_only %} [report only]{% endif %}
{%- endfor %}
{% endif %}""")


@dataclass
class VerificationReport:

    """Result of running one suite over one corpus.

    ``counts`` maps each assertion to the number of graphs it was evaluated
    on; ``inconclusive`` lists assertions whose sampled count stayed below
    ``min_instances``.
    """

    suite: str
    corpus: dict
    graphs: int = 0
    applicable: int = 0
    skipped: int = 0
    counts: Dict[str, int] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)
    inconclusive: List[str] = field(default_factory=list)
    min_instances: int = DEFAULT_MIN_INSTANCES
    wall_time: float = 0.0

    @property
    def failures(self) -> List[Violation]:
        return [v for v in self.violations if not v.report_only]

    @property
    def status(self) -> str:
        if self.failures:
            return 'failed'
        if self.inconclusive:
            return 'inconclusive'
        return 'passed'

    @property
    def passed(self) -> bool:
        return self.status == 'passed'

    def to_dict(self) -> dict:
        data = asdict(self)
        data['status'] = self.status
        return data

    def to_json(self, **kwargs) -> str:
        kwargs.setdefault('indent', 2)
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> 'VerificationReport':
        data = dict(data)
        data.pop('status', None)
        data['violations'] = [Violation(**v) for v in data['violations']]
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> 'VerificationReport':
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        return _SUMMARY.render(report=self)


def _guarded(check):
    def run(graph):
        try:
            return graph, check(graph), False
        except OracleLimitError as e:
            logger.warning("Skipping graph %s: %s", write_graph6(graph), e)
            return graph, [], True
    return run


class _SuiteTask:

    """Picklable per-graph task of a registered suite, for worker
    processes."""

    def __init__(self, name: str):
        self.name = name

    def __call__(self, graph: Graph):
        return _guarded(get_suite(self.name).check)(graph)


def run_suite(suite: Union[str, Suite], corpus: Corpus,
              workers: Optional[int] = None, progress: bool = False,
              minimum: Optional[int] = None) -> VerificationReport:
    """Run ``suite`` over ``corpus``.

    :param workers: worker processes, see ``PYHEAVY_WORKERS``
    :param progress: show a progress bar
    :param minimum: inconclusive floor, see ``PYHEAVY_MIN_INSTANCES``
    """
    if isinstance(suite, str):
        suite = get_suite(suite)
    floor = min_instances(minimum)
    start = time.perf_counter()
    report = VerificationReport(suite.name, {}, min_instances=floor)
    counts = dict.fromkeys(suite.floor_assertions, 0)
    logger.info("Running suite %s", suite.name)
    workers = default_workers(workers)
    if SUITES.get(suite.name) is suite:
        task = _SuiteTask(suite.name)
    else:
        # unregistered checks may not be picklable
        task, workers = _guarded(suite.check), 1
    with _WorkerPool(workers) as pool:
        results = pool.imap(task, corpus, chunksize=WORKER_CHUNKSIZE)
        for graph, outcomes, skipped in tqdm(
                results, desc=suite.name, disable=not progress):
            report.graphs += 1
            report.skipped += skipped
            if outcomes:
                report.applicable += 1
            for outcome in _unique(outcomes):
                counts[outcome.assertion] = counts.get(outcome.assertion, 0) + 1
                if outcome.failed:
                    report.violations.append(Violation(
                        write_graph6(graph), outcome.assertion,
                        outcome.detail, outcome.report_only))
    report.counts = counts
    report.corpus = corpus.describe()
    if corpus.sampled:
        report.inconclusive = [
            name for name in suite.floor_assertions if counts[name] < floor]
    report.wall_time = time.perf_counter() - start
    logger.info("Suite %s %s: %d graphs, %d violations", suite.name,
                report.status, report.graphs, len(report.violations))
    return report


def _unique(outcomes: List[Outcome]) -> List[Outcome]:
    seen = set()
    result = []
    for outcome in outcomes:
        if outcome.assertion not in seen:
            seen.add(outcome.assertion)
            result.append(outcome)
    return result


def verify(suite: str, n_max: Optional[int] = None, samples: int = 0,
           seed: int = 0, workers: Optional[int] = None,
           progress: bool = False, **corpus_options) -> VerificationReport:
    """Build the default corpus of ``suite`` and run it."""
    corpus = build_corpus(suite, n_max=n_max, samples=samples, seed=seed,
                          **corpus_options)
    return run_suite(suite, corpus, workers=workers, progress=progress)


def recheck(report: VerificationReport) -> List[Violation]:
    """Violations of ``report`` that do *not* fail again when re-run."""
    suite = get_suite(report.suite)
    stale = []
    for violation in report.violations:
        outcomes = suite.check(violation.graph())
        if not any(o.assertion == violation.assertion and o.failed
                   for o in outcomes):
            stale.append(violation)
    return stale


def hunt(predicate: str, seeds: Iterable[Graph] = (),
         sampler: Optional[Iterable[Graph]] = None,
         budget: int = 1000) -> List[Violation]:
    """Collect graphs violating a named property.

    Seed graphs are examined first, then graphs from ``sampler``, until
    ``budget`` graphs have been looked at.
    """
    if budget < 1:
        raise ValueError("Hunt budget must be positive")
    test = get_hunt_predicate(predicate)
    found = []
    examined = 0
    for source in (seeds, sampler or ()):
        for graph in source:
            if examined >= budget:
                break
            examined += 1
            try:
                detail = test(graph)
            except OracleLimitError as e:
                logger.warning("Skipping graph %s: %s", write_graph6(graph), e)
                continue
            if detail is not None:
                found.append(Violation(write_graph6(graph), predicate, detail))
    logger.info("Hunt %s: %d witnesses in %d graphs",
                predicate, len(found), examined)
    return found
