"""
Per-graph checks of the verification suites.

A check takes one graph and returns the list of :class:`Outcome` records
it evaluated; an empty list means the graph is outside the scope of the
suite. Outcomes marked ``report_only`` never make a suite fail.
"""

from __future__ import annotations

from pyheavy.closure import (
    check_closed_shape, closure, region_lemma_violations, regions,
    smaller_k112_free_supergraph)
from pyheavy.cycles import (
    circumference, dirac_ore_fan_sanity, is_hamiltonian, max_order,
    naive_circumference, naive_is_hamiltonian)
from pyheavy.families import (
    FamilyGraph, family_claims, gen_G1, gen_G2, gen_G3, gen_G4, gen_L1,
    gen_L2, gen_P_family, pad_with_isolated, petersen, complete_graph,
    cycle_graph, p_family_grid)
from pyheavy.graphops import Graph, induced_subgraph, is_two_connected
from pyheavy.heavy import (
    C_HEAVY_ARROWS, ConditionKind, F_HEAVY_ARROWS, STATED_IMPLICATIONS,
    graph_satisfies, heavy_pairs, is_claw_o_heavy)
from pyheavy.patterns import (
    CATALOG, find_induced_P_member, is_induced_subgraph, is_isomorphic,
    is_S_free, make_pattern)

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple


class SuiteError(ValueError):
    """Unknown suite or hunt predicate."""


class Outcome(NamedTuple):

    assertion: str
    detail: Optional[str] = None
    report_only: bool = False

    @property
    def failed(self) -> bool:
        return self.detail is not None


def _expect(out, assertion, ok, detail='failed', report_only=False):
    out.append(Outcome(assertion, None if ok else detail, report_only))


class Facts:

    """Lazily computed properties of one graph, shared between checks."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self._conditions = {}

    def satisfies(self, pattern: str, kind) -> bool:
        kind = ConditionKind.parse(kind)
        key = (pattern, kind)
        if key not in self._conditions:
            self._conditions[key] = graph_satisfies(
                self.graph, pattern, kind).satisfied
        return self._conditions[key]

    def free(self, pattern: str) -> bool:
        return self.satisfies(pattern, ConditionKind.FREE)

    @cached_property
    def claw_free(self) -> bool:
        return self.free('claw')

    @cached_property
    def claw_o_heavy(self) -> bool:
        return self.claw_free or self.satisfies('claw', ConditionKind.O_HEAVY)

    @cached_property
    def two_connected(self) -> bool:
        return is_two_connected(self.graph)

    @cached_property
    def c_closure(self):
        return closure(self.graph, 'c', check=False)

    @cached_property
    def r_closure(self):
        return closure(self.graph, 'r', check=False)

    @cached_property
    def hamiltonian(self) -> bool:
        return bool(is_hamiltonian(self.graph).value)

    @cached_property
    def circumference(self) -> int:
        return circumference(self.graph).value


def _fits_circumference(graph):
    return graph.n <= max_order('circumference')


# closure-basics

CLOSURE_POLICIES = ('smallest', 'largest', 'random:1', 'random:2', 'random:3')

_C_SHAPE = ('claw-free', 'K112-free', 'at-most-two-cliques', 'no-r-eligible',
            'no-heavy-pair', 'no-c-eligible')
_R_SHAPE = _C_SHAPE[:4]

CLOSURE_ASSERTIONS = (
    'c-closure idempotent',
    'c-closure monotone',
    'c-closure order independent',
    'c-closure degree dominance',
    'c-closure circumference',
    'completion keeps claw-o-heavy',
    'completion neighbour degrees',
) + tuple('c-closure ' + name for name in _C_SHAPE) + (
    'r-closure idempotent',
    'r-closure circumference',
) + tuple('r-closure ' + name for name in _R_SHAPE)


def _covers(big, small):
    return all(b & s == s for b, s in zip(big.adj, small.adj))


def check_closure_basics(graph: Graph) -> List[Outcome]:
    facts = Facts(graph)
    if not facts.claw_o_heavy:
        return []
    out = []
    closed, trace = facts.c_closure
    again = closure(closed, 'c', check=False)
    _expect(out, 'c-closure idempotent', not again.trace,
            '{} further steps'.format(len(again.trace)))
    _expect(out, 'c-closure monotone', _covers(closed, graph))
    others = [closure(graph, 'c', policy, check=False).graph
              for policy in CLOSURE_POLICIES[1:]]
    _expect(out, 'c-closure order independent',
            all(other == closed for other in others),
            'policies disagree')
    _expect(out, 'c-closure degree dominance', all(
        a >= b for a, b in zip(closed.degrees, graph.degrees)))
    if _fits_circumference(graph):
        got = circumference(closed).value
        _expect(out, 'c-closure circumference', got == facts.circumference,
                '{} != {}'.format(got, facts.circumference))

    keeps, degrees = True, True
    previous = graph
    for step, current in zip(trace, trace.graphs(graph)):
        x = step.vertex
        deg = current.degrees
        if any(deg[y] < deg[x] for y in range(graph.n)
               if previous.has_edge(x, y)):
            degrees = False
        if keeps and not is_claw_o_heavy(current):
            keeps = False
        previous = current
    _expect(out, 'completion keeps claw-o-heavy', keeps)
    _expect(out, 'completion neighbour degrees', degrees)

    shape = check_closed_shape(closed, 'c')
    for name in _C_SHAPE:
        _expect(out, 'c-closure ' + name, shape.checks[name])

    if facts.claw_free:
        r_closed = facts.r_closure.graph
        _expect(out, 'r-closure idempotent',
                not closure(r_closed, 'r', check=False).trace)
        if _fits_circumference(graph):
            got = circumference(r_closed).value
            _expect(out, 'r-closure circumference',
                    got == facts.circumference,
                    '{} != {}'.format(got, facts.circumference))
        shape = check_closed_shape(r_closed, 'r')
        for name in _R_SHAPE:
            _expect(out, 'r-closure ' + name, shape.checks[name])
    return out


# minimal-supergraph

MINIMAL_SUPERGRAPH_MAX_ORDER = 6


def check_minimal_supergraph(graph: Graph) -> List[Outcome]:
    if graph.n > MINIMAL_SUPERGRAPH_MAX_ORDER or not is_S_free(graph, 'claw'):
        return []
    closed = closure(graph, 'r', check=False).graph
    smaller = smaller_k112_free_supergraph(graph, closed.edge_count)
    out = []
    _expect(out, 'r-closure least K112-free supergraph', smaller is None,
            'supergraph with {} < {} edges'.format(
                smaller.edge_count if smaller else 0, closed.edge_count))
    return out


# regions

REGION_ASSERTIONS = (
    'region nonseparable',
    'region frontier interior neighbour',
    'region interior paths',
    'vertex in at most two regions',
)


def _region_clause(problem):
    if 'separable' in problem:
        return 'region nonseparable'
    if problem.startswith('frontier'):
        return 'region frontier interior neighbour'
    return 'region interior paths'


def check_regions(graph: Graph) -> List[Outcome]:
    if not is_claw_o_heavy(graph):
        return []
    region_map = regions(graph, check=False)
    problems = region_lemma_violations(graph, region_map)
    out = []
    for assertion in REGION_ASSERTIONS[:3]:
        found = [p for p in problems if _region_clause(p) == assertion]
        _expect(out, assertion, not found, '; '.join(found))
    _expect(out, 'vertex in at most two regions', not region_map.anomalies,
            'vertices {}'.format(list(region_map.anomalies)))
    return out


# stability

@dataclass(frozen=True)
class StabilityEntry:

    """One row of the stability table.

    ``conclusion`` is ``'step'`` (the condition holds after every single
    completion), ``'kept'`` (it holds in the closure) or ``'free'`` (the
    closure contains no copy of the pattern). Probes are pairs without a
    stability claim; their failures are instability witnesses.
    """

    pattern: str
    kind: str
    conclusion: str
    closure_kind: str = 'c'
    probe: bool = False

    @property
    def hypothesis(self) -> str:
        return '{}-{}'.format(self.pattern, ConditionKind.parse(self.kind)
                              .suffix)

    @property
    def assertion(self) -> str:
        text = {
            'step': '{} kept by each completion',
            'kept': '{} kept by %s-closure',
            'free': '{} gives %s-closure without {}',
        }[self.conclusion].replace('%s', self.closure_kind)
        text = text.format(self.hypothesis, self.pattern)
        return text + ' (probe)' if self.probe else text

    def holds(self, facts: Facts) -> Optional[str]:
        """``None`` if the conclusion holds, a detail otherwise."""
        result = (facts.c_closure if self.closure_kind == 'c'
                  else facts.r_closure)
        if self.conclusion == 'step':
            for i, current in enumerate(result.trace.graphs(facts.graph)):
                if not graph_satisfies(current, self.pattern, self.kind):
                    return 'fails after step {}'.format(i + 1)
            return None
        closed = result.graph
        kind = 'free' if self.conclusion == 'free' else self.kind
        witness = graph_satisfies(closed, self.pattern, kind).witness
        if witness is None:
            return None
        return 'closure copy on {}'.format(witness.members())


STABILITY_TABLE = (
    StabilityEntry('P4', 'c', 'step'),
    StabilityEntry('P5', 'c', 'step'),
    StabilityEntry('P6', 'c', 'step'),
    StabilityEntry('P5', 'c', 'free'),
    StabilityEntry('P6', 'c', 'free'),
    StabilityEntry('Z1', 'c', 'kept'),
    StabilityEntry('Z3', 'c', 'kept'),
    StabilityEntry('Z3', 'c', 'free'),
    StabilityEntry('N', 'p', 'step'),
    StabilityEntry('Z2', 'c', 'kept', probe=True),
    StabilityEntry('B', 'c', 'kept', probe=True),
    StabilityEntry('W', 'c', 'kept', probe=True),
    StabilityEntry('N', 'c', 'kept', probe=True),
    StabilityEntry('H', 'c', 'kept', probe=True),
    StabilityEntry('N112', 'c', 'kept', probe=True),
) + tuple(
    StabilityEntry(s, 'free', 'kept', closure_kind='r', probe=True)
    for s in ('P4', 'P5', 'P6', 'Z1', 'Z2', 'Z3', 'H', 'N')
)


def check_stability(graph: Graph) -> List[Outcome]:
    facts = Facts(graph)
    if not facts.claw_o_heavy:
        return []
    out = []
    for entry in STABILITY_TABLE:
        if entry.closure_kind == 'r' and not facts.claw_free:
            continue
        if not facts.satisfies(entry.pattern, entry.kind):
            continue
        detail = entry.holds(facts)
        out.append(Outcome(entry.assertion, detail, entry.probe))
    return out


# main-theorem

MAIN_PATTERNS = ('P4', 'P5', 'P6', 'Z1', 'Z2', 'Z3', 'B', 'N', 'W')
MAIN_MIN_ORDER = 10


def main_assertion(pattern: str, kind: str = 'c') -> str:
    return 'hamiltonian: claw-o-heavy {}-{}-heavy'.format(pattern, kind)


MAIN_ASSERTIONS = tuple(main_assertion(s) for s in MAIN_PATTERNS) + (
    main_assertion('N', 'p'),)


def with_copy(assertion: str, pattern: str) -> str:
    return '{} with a copy of {}'.format(assertion, pattern)


# Counters of the applicable graphs that are not S-free; never floored.
MAIN_WITH_COPY_ASSERTIONS = tuple(
    with_copy(main_assertion(s), s) for s in MAIN_PATTERNS) + (
    with_copy(main_assertion('N', 'p'), 'N'),)


def make_main_theorem_check(min_order: int = MAIN_MIN_ORDER,
                            report_only: bool = False):
    """Hamiltonicity of 2-connected claw-o-heavy ``S``-c-heavy graphs.

    An ``S``-free graph is ``S``-c-heavy and counts for ``S``; graphs
    with a copy of ``S`` are also tallied separately. The net p-heavy
    variant has no order bound.
    """
    def expect_hamiltonian(out, facts, pattern, assertion):
        _expect(out, assertion, facts.hamiltonian, 'not hamiltonian',
                report_only)
        if not facts.free(pattern):
            _expect(out, with_copy(assertion, pattern), True,
                    report_only=True)

    def check(graph: Graph) -> List[Outcome]:
        facts = Facts(graph)
        if graph.n < 3 or not (facts.two_connected and facts.claw_o_heavy):
            return []
        out = []
        if graph.n >= min_order:
            for pattern in MAIN_PATTERNS:
                if facts.satisfies(pattern, 'c'):
                    expect_hamiltonian(out, facts, pattern,
                                       main_assertion(pattern))
        if facts.satisfies('N', 'p'):
            expect_hamiltonian(out, facts, 'N', main_assertion('N', 'p'))
        return out
    return check


# heavy-pairs

@dataclass(frozen=True)
class HeavyPairRule:

    claw_kind: str
    pattern: str
    kind: str
    min_order: int = 3

    @property
    def assertion(self) -> str:
        text = 'hamiltonian: claw-{}-heavy {}-{}-heavy'.format(
            self.claw_kind, self.pattern, self.kind)
        if self.min_order > 3:
            text += ' (n >= {})'.format(self.min_order)
        return text


HEAVY_PAIR_RULES = tuple(
    HeavyPairRule('o', s, 'o')
    for s in ('P4', 'P5', 'C3', 'Z1', 'Z2', 'B', 'N', 'W')
) + tuple(
    HeavyPairRule('f', s, 'f', 10)
    for s in ('P4', 'P5', 'P6', 'Z1', 'Z2', 'Z3', 'B', 'N', 'W')
) + (
    HeavyPairRule('f', 'N', 'c'),
    HeavyPairRule('o', 'N', 'f'),
    HeavyPairRule('f', 'B', 'f'),
    HeavyPairRule('f', 'Z1', 'f'),
)


def check_heavy_pairs(graph: Graph) -> List[Outcome]:
    facts = Facts(graph)
    if graph.n < 3 or not facts.two_connected:
        return []
    out = []
    for rule in HEAVY_PAIR_RULES:
        if graph.n < rule.min_order:
            continue
        if (facts.satisfies('claw', rule.claw_kind)
                and facts.satisfies(rule.pattern, rule.kind)):
            _expect(out, rule.assertion, facts.hamiltonian, 'not hamiltonian')
    return out


# forbidden-pairs

FORBIDDEN_PAIRS = ('N', 'P6', 'W', 'Z3')


def forbidden_assertion(pattern: str) -> str:
    return 'hamiltonian: claw-free {}-free'.format(pattern)


@lru_cache(maxsize=None)
def _exceptions():
    return (gen_L1().graph, gen_L2().graph)


def check_forbidden_pairs(graph: Graph) -> List[Outcome]:
    facts = Facts(graph)
    if graph.n < 3 or not (facts.two_connected and facts.claw_free):
        return []
    out = []
    for pattern in FORBIDDEN_PAIRS:
        if not facts.free(pattern):
            continue
        ok = facts.hamiltonian
        if not ok and pattern == 'Z3':
            ok = any(is_isomorphic(graph, g) for g in _exceptions())
        _expect(out, forbidden_assertion(pattern), ok, 'not hamiltonian')
    return out


# obstruction

OBSTRUCTION_ASSERTIONS = (
    'non-hamiltonian claw-free graph has induced obstruction',
    'obstruction witness induces its family member',
)


def _member_of(label):
    params = re.match(r'^P\((.*)\)$', label).group(1).split(',')
    return gen_P_family(*params).graph


def check_obstruction(graph: Graph) -> List[Outcome]:
    facts = Facts(graph)
    if graph.n < 3 or not (facts.two_connected and facts.claw_free):
        return []
    if facts.hamiltonian:
        return []
    witness = find_induced_P_member(graph)
    out = []
    _expect(out, OBSTRUCTION_ASSERTIONS[0], witness is not None, 'no witness')
    if witness is not None:
        _expect(out, OBSTRUCTION_ASSERTIONS[1], is_isomorphic(
            induced_subgraph(graph, witness.vertices),
            _member_of(witness.label)),
            '{} on {}'.format(witness.label, witness.members()))
    return out


# implications

UNIVERSAL_C_HEAVY = ('C3', 'P3', 'K4', 'S4')

IMPLICATIONS = F_HEAVY_ARROWS + C_HEAVY_ARROWS + STATED_IMPLICATIONS


def check_implications(graph: Graph) -> List[Outcome]:
    facts = Facts(graph)
    out = []
    for arrow in IMPLICATIONS:
        if facts.satisfies(arrow.source, arrow.source_kind):
            _expect(out, str(arrow),
                    facts.satisfies(arrow.target, arrow.target_kind),
                    'target fails', arrow.uncertain)
    for pattern in UNIVERSAL_C_HEAVY:
        _expect(out, 'every graph is {}-c-heavy'.format(pattern),
                facts.satisfies(pattern, 'c'))
    return out


# pattern-order

@lru_cache(maxsize=None)
def pattern_order_pairs() -> Tuple[Tuple[str, str], ...]:
    """Catalog pairs ``(a, b)`` with ``a`` an induced subgraph of ``b``."""
    specs = {name: make_pattern(name) for name in CATALOG}
    return tuple(
        (a, b)
        for a in CATALOG for b in CATALOG
        if a != b and specs[a].order < specs[b].order
        and is_induced_subgraph(specs[a], specs[b])
    )


def check_pattern_order(graph: Graph) -> List[Outcome]:
    facts = Facts(graph)
    out = []
    for a, b in pattern_order_pairs():
        if facts.free(a):
            _expect(out, '{}-free implies {}-free'.format(a, b), facts.free(b))
    return out


# oracles

NAIVE_MAX_ORDER = 8

ORACLE_ASSERTIONS = (
    'hamiltonicity agrees with permutation search',
    'circumference agrees with permutation search',
    'hamiltonian certificate is a cycle',
    'circumference certificate is a cycle',
    'hamiltonian iff circumference equals order',
)


def check_oracles(graph: Graph) -> List[Outcome]:
    out = []
    ham, ham_cycle = is_hamiltonian(graph)
    if ham:
        _expect(out, ORACLE_ASSERTIONS[2], ham_cycle.is_valid(graph)
                and ham_cycle.length == graph.n)
    if _fits_circumference(graph):
        circ, circ_cycle = circumference(graph)
        if circ:
            _expect(out, ORACLE_ASSERTIONS[3], circ_cycle.is_valid(graph)
                    and circ_cycle.length == circ)
        _expect(out, ORACLE_ASSERTIONS[4], bool(ham) == (circ == graph.n),
                'hamiltonian={}, circumference={}'.format(ham, circ))
        if graph.n <= NAIVE_MAX_ORDER:
            naive = naive_circumference(graph)
            _expect(out, ORACLE_ASSERTIONS[1], naive == circ,
                    '{} != {}'.format(circ, naive))
    if graph.n <= NAIVE_MAX_ORDER:
        naive = naive_is_hamiltonian(graph)
        _expect(out, ORACLE_ASSERTIONS[0], naive == bool(ham),
                '{} != {}'.format(bool(ham), naive))
    return out


# classical

CLASSICAL = ('dirac', 'ore', 'fan')


def check_classical(graph: Graph) -> List[Outcome]:
    report = dirac_ore_fan_sanity(graph)
    out = []
    for name in CLASSICAL:
        if report.applies[name]:
            _expect(out, '{} condition gives hamiltonian'.format(name),
                    name not in report.violations, 'not hamiltonian')
    return out


# padding

def check_padding(graph: Graph) -> List[Outcome]:
    if not is_S_free(graph, 'claw'):
        return []
    padded = pad_with_isolated(graph)
    closed = closure(padded, 'c', check=False).graph
    restricted = induced_subgraph(closed, graph.full)
    expected = closure(graph, 'r', check=False).graph
    out = []
    _expect(out, 'padded c-closure equals r-closure', restricted == expected)
    _expect(out, 'padding leaves no heavy pair', not heavy_pairs(padded))
    return out


# families

@lru_cache(maxsize=None)
def family_grid() -> Tuple[FamilyGraph, ...]:
    """Parameter grid of the drawn instability constructions."""
    return (
        gen_G1(3), gen_G1(5), gen_G1(8),
        gen_G2(5, 8), gen_G2(6, 9), gen_G2(5, 8, 'literal'),
        gen_G3(2, 8), gen_G3(2, 12), gen_G3(3, 12), gen_G3(3, 16),
        gen_G4(8), gen_G4(10),
    )


@lru_cache(maxsize=None)
def _families_by_graph():
    return {family.graph: family for family in family_grid()}


def check_families(graph: Graph) -> List[Outcome]:
    family = _families_by_graph().get(graph)
    if family is None:
        return []
    return [
        Outcome('{}: {}'.format(family.name, claim.text),
                None if claim.holds else family.title, report_only=True)
        for claim in family_claims(family)
    ]


# Registry

def _no_graphs():
    return []


@dataclass(frozen=True)
class Suite:

    """A named check with its default corpus.

    ``sample_filter`` and ``sample_orders`` drive the random part of the
    corpus, ``explicit`` adds fixed graphs. With ``floor`` set, a sampled
    run with fewer applicable graphs than the configured minimum for any of
    ``floor_assertions`` is reported as inconclusive.
    """

    name: str
    check: Callable[[Graph], List[Outcome]]
    description: str
    assertions: Tuple[str, ...] = ()
    sample_filter: Optional[str] = None
    sample_orders: Tuple[int, int] = (8, 13)
    explicit: Callable[[], List[Graph]] = _no_graphs
    floor_assertions: Tuple[str, ...] = ()
    exhaustive: bool = True


def _stability_assertions():
    return tuple(entry.assertion for entry in STABILITY_TABLE)


def _implication_assertions():
    return tuple(str(arrow) for arrow in IMPLICATIONS) + tuple(
        'every graph is {}-c-heavy'.format(p) for p in UNIVERSAL_C_HEAVY)


def _explicit_obstructions():
    return [family.graph for family in p_family_grid()]


def _explicit_forbidden():
    return [gen_L1().graph, gen_L2().graph, cycle_graph(10)] + [
        family.graph for family in p_family_grid()]


def _explicit_main():
    return [complete_graph(n) for n in range(10, 15)]


def _explicit_oracles():
    return [petersen(), gen_L1().graph, gen_L2().graph]


def _explicit_families():
    return [family.graph for family in family_grid()]


_SUITES = (
    Suite('closure-basics', check_closure_basics,
          'c- and r-closure invariants of claw-o-heavy graphs',
          CLOSURE_ASSERTIONS, 'claw-o-heavy'),
    Suite('minimal-supergraph', check_minimal_supergraph,
          'r-closure is a least K112-free supergraph',
          ('r-closure least K112-free supergraph',),
          'claw-free', (5, MINIMAL_SUPERGRAPH_MAX_ORDER)),
    Suite('regions', check_regions,
          'structure of the regions of claw-o-heavy graphs',
          REGION_ASSERTIONS, 'claw-o-heavy'),
    Suite('stability', check_stability,
          'conditions kept by the closures, with instability probes',
          _stability_assertions(), 'claw-o-heavy',
          floor_assertions=tuple(
              e.assertion for e in STABILITY_TABLE if not e.probe)),
    Suite('main-theorem', make_main_theorem_check(),
          'hamiltonicity of 2-connected claw-o-heavy S-c-heavy graphs',
          MAIN_ASSERTIONS, '2-connected & claw-o-heavy & order>=10',
          (10, 14), _explicit_main, MAIN_ASSERTIONS, exhaustive=False),
    Suite('main-theorem-diagnostic',
          make_main_theorem_check(min_order=3, report_only=True),
          'main theorem without the order bound, report only',
          MAIN_ASSERTIONS, '2-connected & claw-o-heavy',
          (6, 12), _explicit_forbidden),
    Suite('heavy-pairs', check_heavy_pairs,
          'hamiltonicity under pairs of heavy subgraph conditions',
          tuple(rule.assertion for rule in HEAVY_PAIR_RULES),
          '2-connected & claw-o-heavy', (8, 13)),
    Suite('forbidden-pairs', check_forbidden_pairs,
          'hamiltonicity of 2-connected claw-free S-free graphs',
          tuple(forbidden_assertion(p) for p in FORBIDDEN_PAIRS),
          '2-connected & claw-free', (8, 13), _explicit_forbidden),
    Suite('obstruction', check_obstruction,
          'induced obstruction in non-hamiltonian claw-free graphs',
          OBSTRUCTION_ASSERTIONS, '2-connected & claw-free & '
          'non-hamiltonian', (8, 13), _explicit_obstructions),
    Suite('implications', check_implications,
          'implications between heavy subgraph conditions',
          _implication_assertions(), None, (5, 12)),
    Suite('pattern-order', check_pattern_order,
          'freeness follows the induced subgraph order of the catalog',
          (), None, (5, 12)),
    Suite('oracles', check_oracles,
          'exact cycle oracles against permutation search',
          ORACLE_ASSERTIONS, None, (5, 8), _explicit_oracles),
    Suite('classical', check_classical,
          'Dirac, Ore and Fan conditions',
          tuple('{} condition gives hamiltonian'.format(c)
                for c in CLASSICAL), None, (6, 14)),
    Suite('padding', check_padding,
          'c-closure of a padded claw-free graph is its r-closure',
          ('padded c-closure equals r-closure',
           'padding leaves no heavy pair'), 'claw-free', (5, 10)),
    Suite('families', check_families,
          'claims of the drawn instability constructions, report only',
          (), None, explicit=_explicit_families, exhaustive=False),
)

SUITES: Dict[str, Suite] = {suite.name: suite for suite in _SUITES}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise SuiteError("Unknown suite: {!r}; choose from {}".format(
            name, ', '.join(SUITES)))


# Which suite checks which stated result. Entries without an assertion are
# checked by every assertion of the suite.
COVERAGE: Dict[str, Tuple[str, Optional[str]]] = {
    'c-closure well defined': (
        'closure-basics', 'c-closure order independent'),
    'c-closure circumference': (
        'closure-basics', 'c-closure circumference'),
    'c-closure is claw-free': ('closure-basics', 'c-closure claw-free'),
    'c-closure is K112-free': ('closure-basics', 'c-closure K112-free'),
    'c-closure has no heavy pair': (
        'closure-basics', 'c-closure no-heavy-pair'),
    'c-closed graphs are r-closed': (
        'closure-basics', 'c-closure no-r-eligible'),
    'completion keeps claw-o-heavy': (
        'closure-basics', 'completion keeps claw-o-heavy'),
    'completion neighbour degrees': (
        'closure-basics', 'completion neighbour degrees'),
    'r-closure well defined': ('closure-basics', 'r-closure idempotent'),
    'r-closure circumference': ('closure-basics', 'r-closure circumference'),
    'r-closure least K112-free supergraph': (
        'minimal-supergraph', 'r-closure least K112-free supergraph'),
    'region nonseparable': ('regions', 'region nonseparable'),
    'region frontier interior neighbour': (
        'regions', 'region frontier interior neighbour'),
    'region interior paths': ('regions', 'region interior paths'),
    'P_i-c-heavy kept by each completion': (
        'stability', 'P6-c-heavy kept by each completion'),
    'P_i-c-heavy c-closure is P_i-free': (
        'stability', 'P5-c-heavy gives c-closure without P5'),
    'Z1-c-heavy c-stable': ('stability', 'Z1-c-heavy kept by c-closure'),
    'Z_i-c-heavy c-closure is Z_i-free': (
        'stability', 'Z3-c-heavy gives c-closure without Z3'),
    'N-p-heavy kept by each completion': (
        'stability', 'N-p-heavy kept by each completion'),
    'c-stable patterns are exactly cliques, paths and Z_i (i != 2)': (
        'stability', 'Z2-c-heavy kept by c-closure (probe)'),
    'drawn instability constructions': ('families', None),
    'hamiltonicity of claw-o-heavy S-c-heavy graphs': (
        'main-theorem', main_assertion('N')),
    'hamiltonicity of claw-o-heavy N-p-heavy graphs': (
        'main-theorem', main_assertion('N', 'p')),
    'claw-free N-free graphs are hamiltonian': (
        'forbidden-pairs', forbidden_assertion('N')),
    'claw-free P6-free graphs are hamiltonian': (
        'forbidden-pairs', forbidden_assertion('P6')),
    'claw-free W-free graphs are hamiltonian': (
        'forbidden-pairs', forbidden_assertion('W')),
    'claw-free Z3-free graphs are hamiltonian or L1, L2': (
        'forbidden-pairs', forbidden_assertion('Z3')),
    'o-heavy pairs with the claw': (
        'heavy-pairs', HeavyPairRule('o', 'W', 'o').assertion),
    'f-heavy pairs with the claw': (
        'heavy-pairs', HeavyPairRule('f', 'Z3', 'f', 10).assertion),
    'claw-f-heavy N-c-heavy graphs are hamiltonian': (
        'heavy-pairs', HeavyPairRule('f', 'N', 'c').assertion),
    'obstruction in non-hamiltonian claw-free graphs': (
        'obstruction', OBSTRUCTION_ASSERTIONS[0]),
    'f-heavy implication arrows': ('implications', 'P4-f-heavy => N-f-heavy'),
    'c-heavy implication arrows': ('implications', 'Z1-c-heavy => B-c-heavy'),
    'N-c-heavy graphs are N-p-heavy': (
        'implications', 'N-c-heavy => N-p-heavy'),
    'every graph is C3- and P3-c-heavy': (
        'implications', 'every graph is C3-c-heavy'),
    'induced subgraph order and freeness': ('pattern-order', None),
    'Dirac, Ore and Fan conditions': (
        'classical', 'fan condition gives hamiltonian'),
    'oracle agreement': (
        'oracles', 'hamiltonicity agrees with permutation search'),
    'padding turns the c-closure into the r-closure': (
        'padding', 'padded c-closure equals r-closure'),
}


# Hunt predicates: return a detail when the graph violates the property.

HuntPredicate = Callable[[Graph], Optional[str]]


def _closure_preserves(pattern):
    def predicate(graph):
        facts = Facts(graph)
        if not facts.claw_o_heavy or not facts.satisfies(pattern, 'c'):
            return None
        witness = graph_satisfies(facts.c_closure.graph, pattern, 'c').witness
        if witness is None:
            return None
        return 'c-closure has a non-c-heavy {} on {}'.format(
            pattern, witness.members())
    return predicate


def _closure_no_heavy_pair(graph):
    facts = Facts(graph)
    if not facts.claw_o_heavy:
        return None
    pairs = heavy_pairs(facts.c_closure.graph)
    return 'heavy pairs {}'.format(pairs) if pairs else None


def _hamiltonian_under(claw_kind):
    def predicate(graph):
        facts = Facts(graph)
        if graph.n < 3 or not facts.two_connected:
            return None
        if not facts.satisfies('claw', claw_kind):
            return None
        return None if facts.hamiltonian else 'not hamiltonian'
    return predicate


HUNT_PREDICATES: Dict[str, HuntPredicate] = {
    'closure-no-heavy-pair': _closure_no_heavy_pair,
    'c3-c-heavy-hamiltonian': _hamiltonian_under('o'),
    'p3-c-heavy-hamiltonian': _hamiltonian_under('o'),
    'claw-free-hamiltonian': _hamiltonian_under('free'),
}
HUNT_PREDICATES.update(
    ('closure-preserves-{}-c-heavy'.format(p), _closure_preserves(p))
    for p in CATALOG)


def get_hunt_predicate(name: str) -> HuntPredicate:
    try:
        return HUNT_PREDICATES[name]
    except KeyError:
        raise SuiteError("Unknown hunt predicate: {!r}".format(name))
