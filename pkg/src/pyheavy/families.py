"""
Named graphs, parametric families and corpora of random or enumerated
graphs.

The two-triangle obstruction family ``P(x1, x2, x3)`` and the four
claw-o-heavy constructions ``G1``-``G4`` carry vertex labels, so they are
returned as :class:`FamilyGraph` values. Each construction comes with a
list of claims about it (see :func:`family_claims`); the claims are
evaluated on request rather than at construction unless ``verify=True``.
"""

from __future__ import annotations

from pyheavy.closure import closure
from pyheavy.cycles import is_hamiltonian
from pyheavy.graphops import (
    Graph, build_graph, disjoint_union, from_edge_code, induced_subgraph,
    is_connected, is_two_connected, maximal_cliques, pair_list)
from pyheavy.heavy import (
    copy_is_c_heavy, graph_satisfies, heavy_vertices,
    is_claw_o_heavy, parse_condition)
from pyheavy.patterns import is_S_free, is_isomorphic, make_pattern

import numpy as np

import logging
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import (
    Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union)


logger = logging.getLogger(__name__)


class FamilyError(ValueError):
    """Invalid family name or parameter."""


class FamilyClaimError(FamilyError):
    """A stated property of a construction does not hold."""


# Named graphs

def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return build_graph(n)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FamilyError("A cycle needs at least 3 vertices, got {}".format(n))
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return build_graph(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def wheel(k: int) -> Graph:
    """Hub ``0`` joined to every vertex of a cycle ``1..k``."""
    _require(k >= 3, "A wheel needs a rim of at least 3 vertices, got {}", k)
    rim = [(1 + v, 1 + (v + 1) % k) for v in range(k)]
    return build_graph(k + 1, rim + [(0, v) for v in range(1, k + 1)])


def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return build_graph(10, outer + spokes + inner)


def pad_with_isolated(graph: Graph, count: Optional[int] = None) -> Graph:
    """Add ``count`` (default ``n``) isolated vertices.

    With at least ``n`` extra vertices no pair of the result has degree
    sum reaching its order, so the c-closure acts like the r-closure.
    """
    return disjoint_union(graph, empty_graph(graph.n if count is None
                                             else count))


# Labelled constructions

@dataclass(frozen=True)
class Claim:
    text: str
    holds: bool

    def to_dict(self):
        return {'claim': self.text, 'holds': self.holds}


@dataclass(frozen=True)
class FamilyGraph:

    """A generated graph together with its vertex labels."""

    name: str
    params: Tuple[Tuple[str, object], ...]
    graph: Graph = field(repr=False)
    labels: Dict[str, int] = field(compare=False, repr=False)
    variant: Optional[str] = None

    def vertex(self, label: str) -> int:
        try:
            return self.labels[label]
        except KeyError:
            raise FamilyError("{} has no vertex {!r}".format(self.title, label))

    def mask(self, labels: Iterable[str]) -> int:
        return sum(1 << self.vertex(label) for label in labels)

    @property
    def title(self) -> str:
        args = ','.join('{}={}'.format(k, v) for k, v in self.params)
        return '{}({})'.format(self.name, args)

    def to_dict(self):
        return {
            'family': self.name,
            'params': dict(self.params),
            'variant': self.variant,
            'order': self.graph.n,
        }


class _Builder:

    def __init__(self):
        self.labels = {}
        self.edges = []

    def add(self, *labels):
        for label in labels:
            self.labels[label] = len(self.labels)

    def edge(self, u, v):
        self.edges.append((self.labels[u], self.labels[v]))

    def path(self, labels):
        for u, v in zip(labels, labels[1:]):
            self.edge(u, v)

    def clique(self, labels):
        for u, v in combinations(labels, 2):
            self.edge(u, v)

    def join(self, label, others):
        for other in others:
            self.edge(label, other)

    def build(self, name, params, variant=None):
        graph = build_graph(len(self.labels), self.edges)
        return FamilyGraph(name, tuple(params), graph, dict(self.labels),
                           variant)


def _require(condition, message, *args):
    if not condition:
        raise FamilyError(message.format(*args))


def _connector(value):
    if isinstance(value, str) and value.strip().upper() == 'T':
        return 'T'
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise FamilyError("Connector must be 'T' or an integer >= 3, "
                          "got {!r}".format(value))
    _require(value >= 3, "Connector paths need at least 3 vertices, got {}",
             value)
    return value


def gen_P_family(x1, x2, x3) -> FamilyGraph:
    """Two triangles ``a1a2a3``, ``b1b2b3`` with ``a_i`` joined to ``b_i``
    by a path on ``x_i`` vertices or, for ``x_i = 'T'``, by an edge and a
    common neighbour ``t_i``."""
    xs = [_connector(x) for x in (x1, x2, x3)]
    b = _Builder()
    b.add('a1', 'a2', 'a3', 'b1', 'b2', 'b3')
    b.clique(['a1', 'a2', 'a3'])
    b.clique(['b1', 'b2', 'b3'])
    for i, x in enumerate(xs, 1):
        a, z = 'a{}'.format(i), 'b{}'.format(i)
        if x == 'T':
            t = 't{}'.format(i)
            b.add(t)
            b.edge(a, z)
            b.join(t, [a, z])
        else:
            inner = ['p{}_{}'.format(i, j) for j in range(1, x - 1)]
            b.add(*inner)
            b.path([a] + inner + [z])
    return b.build('P', zip(('x1', 'x2', 'x3'), xs))


def gen_L1() -> FamilyGraph:
    return gen_P_family('T', 'T', 'T')


def gen_L2() -> FamilyGraph:
    return gen_P_family(3, 'T', 'T')


def _block(prefix, count, start=1):
    return ['{}{}'.format(prefix, i) for i in range(start, start + count)]


def gen_G1(r: int, verify: bool = False) -> FamilyGraph:
    """Clique ``K`` of order ``r`` fully joined to an independent set
    ``a1..ar``; ``b1, b2`` adjacent to each other and to all ``a_i``;
    ``c1`` adjacent to ``b1``, ``c2`` to ``b2`` and ``c1c2`` an edge."""
    _require(int(r) >= 3, "G1 needs r >= 3, got {}", r)
    r = int(r)
    b = _Builder()
    ks, as_ = _block('k', r), _block('a', r)
    b.add(*ks)
    b.add(*as_)
    b.add('b1', 'b2', 'c1', 'c2')
    b.clique(ks)
    for a in as_:
        b.join(a, ks + ['b1', 'b2'])
    b.edge('b1', 'b2')
    b.path(['b1', 'c1', 'c2', 'b2'])
    return _finish(b.build('G1', [('r', r)]), verify)


G2_VARIANTS = ('drawn', 'literal')


def gen_G2(k: int, r: int, variant: str = 'drawn',
           verify: bool = False) -> FamilyGraph:
    """Clique ``K`` of order ``r`` joined to the path ``a1a2a3a4``;
    ``a1`` joined to a ``k``-clique ``D``, ``a4`` to a ``k``-clique ``E``;
    ``b1 b4`` an edge; pendants ``b2`` at ``a2`` and ``b3`` at ``a3``.

    ``'drawn'``: ``b1`` belongs to ``D``, ``b4`` to ``E`` and ``b2, b3``
    are joined through one middle vertex ``m``. ``'literal'``: ``b1, b4``
    are extra vertices fully joined to ``D`` resp. ``E`` and ``b2b3`` is an
    edge.
    """
    k, r = int(k), int(r)
    _require(k + 3 <= r <= 2 * k - 2,
             "G2 needs k + 3 <= r <= 2k - 2, got k={}, r={}", k, r)
    _require(variant in G2_VARIANTS, "Unknown G2 variant: {!r}", variant)
    b = _Builder()
    ks = _block('k', r)
    as_ = _block('a', 4)
    b.add(*ks)
    b.add(*as_)
    if variant == 'drawn':
        low, high = ['b1'] + _block('d', k - 1), ['b4'] + _block('e', k - 1)
        b.add(*low)
        b.add(*high)
        b.add('b2', 'm', 'b3')
        b.path(['b2', 'm', 'b3'])
    else:
        low, high = _block('d', k), _block('e', k)
        b.add(*low)
        b.add(*high)
        b.add('b1', 'b4', 'b2', 'b3')
        b.join('b1', ['a1'] + low)
        b.join('b4', ['a4'] + high)
        b.edge('b2', 'b3')
    b.clique(ks)
    for a in as_:
        b.join(a, ks)
    b.path(as_)
    b.clique(low)
    b.clique(high)
    b.join('a1', low)
    b.join('a4', high)
    b.edge('b1', 'b4')
    b.edge('a2', 'b2')
    b.edge('a3', 'b3')
    return _finish(b.build('G2', [('k', k), ('r', r)], variant), verify)


G3_VARIANTS = ('drawn', 'literal')


def gen_G3(t: int, r: int, variant: str = 'drawn',
           verify: bool = False) -> FamilyGraph:
    """Clique ``K`` of order ``r`` and four paths ``a0..at``, ``b0..bt``,
    ``c0..ct``, ``d0..dt`` whose first vertices are joined to ``K``;
    ``at`` and ``bt`` share the neighbour ``mab``, ``ct`` and ``dt`` the
    neighbour ``mcd``. The ``'literal'`` variant also adds the edges
    ``at bt`` and ``ct dt``.

    The origins ``a0..d0`` only form heavy pairs when ``r >= 4t + 4``.
    """
    t, r = int(t), int(r)
    _require(t >= 2, "G3 needs t >= 2, got {}", t)
    _require(r >= 4 * t, "G3 needs r >= 4t, got t={}, r={}", t, r)
    _require(variant in G3_VARIANTS, "Unknown G3 variant: {!r}", variant)
    b = _Builder()
    ks = _block('k', r)
    b.add(*ks)
    b.clique(ks)
    for name in 'abcd':
        arm = _block(name, t + 1, start=0)
        b.add(*arm)
        b.path(arm)
        b.join(arm[0], ks)
    b.add('mab', 'mcd')
    for x, y, m in (('a', 'b', 'mab'), ('c', 'd', 'mcd')):
        xt, yt = '{}{}'.format(x, t), '{}{}'.format(y, t)
        b.join(m, [xt, yt])
        if variant == 'literal':
            b.edge(xt, yt)
    return _finish(b.build('G3', [('t', t), ('r', r)], variant), verify)


def gen_G4(r: int, verify: bool = False) -> FamilyGraph:
    """Clique ``K`` of order ``r`` joined to independent ``a1..a4``;
    ``b1`` adjacent to ``a1, a2, c1, c2``; ``b4`` adjacent to ``a3, a4,
    c3, c4``; path ``c1c2c3c4``."""
    r = int(r)
    _require(r >= 8, "G4 needs r >= 8, got {}", r)
    b = _Builder()
    ks, as_, cs = _block('k', r), _block('a', 4), _block('c', 4)
    b.add(*ks)
    b.add(*as_)
    b.add('b1', 'b4')
    b.add(*cs)
    b.clique(ks)
    for a in as_:
        b.join(a, ks)
    b.join('b1', ['a1', 'a2', 'c1', 'c2'])
    b.join('b4', ['a3', 'a4', 'c3', 'c4'])
    b.path(cs)
    return _finish(b.build('G4', [('r', r)]), verify)


def _finish(family, verify):
    if verify:
        failed = [c.text for c in family_claims(family) if not c.holds]
        if failed:
            raise FamilyClaimError("{} fails: {}".format(
                family.title, '; '.join(failed)))
    return family


# Claims

def _is_maximal_clique_of(graph, mask):
    return mask in maximal_cliques(graph)


def _non_c_heavy_copy(graph, mask, pattern):
    spec = make_pattern(pattern)
    return (is_isomorphic(induced_subgraph(graph, mask), spec.graph)
            and not copy_is_c_heavy(graph, mask))


def _closure_claims(family, block, copy, pattern):
    closed = closure(family.graph, 'c', check=False).graph
    return closed, [
        Claim('closure merges {} into one maximal clique'.format(
            _describe(block)),
            _is_maximal_clique_of(closed, family.mask(block))),
        Claim('{{{}}} induces a {} that is not c-heavy in the closure'.format(
            ','.join(copy), pattern),
            _non_c_heavy_copy(closed, family.mask(copy), pattern)),
    ]


def _describe(labels):
    ks = [x for x in labels if x.startswith('k')]
    rest = [x for x in labels if not x.startswith('k')]
    return ' + '.join((['K'] if ks else []) + [','.join(rest)])


def _claims_G1(family):
    block = [x for x in family.labels if x[0] in 'ka'] + ['b1', 'b2']
    claims = [
        Claim('claw-o-heavy', is_claw_o_heavy(family.graph)),
        Claim('Z2-c-heavy', bool(graph_satisfies(family.graph, 'Z2', 'c'))),
    ]
    _, closure_claims = _closure_claims(
        family, block, ['a1', 'a2', 'b1', 'c1', 'c2'], 'Z2')
    return claims + closure_claims


def _claims_G2(family):
    block = [x for x in family.labels if x.startswith('k')] + _block('a', 4)
    claims = [
        Claim('claw-o-heavy', is_claw_o_heavy(family.graph)),
        Claim('N-c-heavy', bool(graph_satisfies(family.graph, 'N', 'c'))),
    ]
    closed, closure_claims = _closure_claims(
        family, block, ['a1', 'b1', 'a2', 'b2', 'a3', 'b3'], 'N')
    heavy = heavy_vertices(closed)
    light = not heavy & family.mask(['a2', 'a3'])
    return claims + closure_claims + [
        Claim('a2 and a3 are not heavy in the closure', light)]


def _claims_G3(family):
    t = dict(family.params)['t']
    block = [x for x in family.labels if x.startswith('k')] + [
        'a0', 'b0', 'c0', 'd0']
    triples = [
        (i, j, k)
        for i in range(1, t + 1)
        for j in range(i, t + 1)
        for k in range(j, t + 1) if k >= 2
    ]
    free = all(is_S_free(family.graph, make_pattern('N', *ijk))
               for ijk in triples)
    copy = (_block('a', t + 1, 0) + _block('b', t + 1, 0)
            + _block('c', t + 1, 0))
    claims = [
        Claim('claw-o-heavy', is_claw_o_heavy(family.graph)),
        Claim('N_ijk-free for i,j,k <= {} with max >= 2'.format(t), free),
    ]
    _, closure_claims = _closure_claims(
        family, block, copy, 'N{},{},{}'.format(t, t, t))
    return claims + closure_claims


def _claims_G4(family):
    block = [x for x in family.labels if x.startswith('k')] + _block('a', 4)
    claims = [
        Claim('claw-o-heavy', is_claw_o_heavy(family.graph)),
        Claim('H-free', is_S_free(family.graph, 'H')),
    ]
    _, closure_claims = _closure_claims(
        family, block, ['a1', 'a2', 'b1', 'c1', 'c2'], 'H')
    return claims + closure_claims


def _claims_P(family):
    graph = family.graph
    return [
        Claim('2-connected', is_two_connected(graph)),
        Claim('claw-free', is_S_free(graph, 'claw')),
        Claim('not hamiltonian', not is_hamiltonian(graph).value),
    ]


_CLAIMS = {
    'P': _claims_P,
    'G1': _claims_G1,
    'G2': _claims_G2,
    'G3': _claims_G3,
    'G4': _claims_G4,
}


def family_claims(family: FamilyGraph) -> List[Claim]:
    """Evaluate the stated properties of a construction."""
    evaluate = _CLAIMS.get(family.name)
    claims = evaluate(family) if evaluate else []
    for claim in claims:
        if not claim.holds:
            logger.warning("%s: claim does not hold: %s",
                           family.title, claim.text)
    return claims


# Registry used by the command line

@dataclass(frozen=True)
class FamilyInfo:
    builder: Callable[..., Union[FamilyGraph, Graph]]
    params: Tuple[str, ...]
    constraint: str


FAMILIES = {
    'L1': FamilyInfo(gen_L1, (), 'P(T,T,T)'),
    'L2': FamilyInfo(gen_L2, (), 'P(3,T,T)'),
    'P': FamilyInfo(gen_P_family, ('x1', 'x2', 'x3'),
                    'each x_i is T or an integer >= 3'),
    'G1': FamilyInfo(gen_G1, ('r',), 'r >= 3'),
    'G2': FamilyInfo(gen_G2, ('k', 'r', 'variant'),
                     'k + 3 <= r <= 2k - 2; variant drawn|literal'),
    'G3': FamilyInfo(gen_G3, ('t', 'r', 'variant'),
                     't >= 2, r >= 4t; variant drawn|literal'),
    'G4': FamilyInfo(gen_G4, ('r',), 'r >= 8'),
    'complete': FamilyInfo(complete_graph, ('n',), 'n >= 0'),
    'empty': FamilyInfo(empty_graph, ('n',), 'n >= 0'),
    'path': FamilyInfo(path_graph, ('n',), 'n >= 0'),
    'cycle': FamilyInfo(cycle_graph, ('n',), 'n >= 3'),
    'complete-bipartite': FamilyInfo(complete_bipartite, ('p', 'q'),
                                     'p, q >= 0'),
    'wheel': FamilyInfo(wheel, ('k',), 'k >= 3'),
    'petersen': FamilyInfo(petersen, (), ''),
}


def build_family(name: str, verify: bool = False, **params) -> FamilyGraph:
    """Build a registered family member or named graph.

    Named graphs come back as a :class:`FamilyGraph` whose labels are the
    vertex numbers.
    """
    try:
        info = FAMILIES[name]
    except KeyError:
        raise FamilyError("Unknown family: {!r}".format(name))
    unknown = set(params) - set(info.params)
    if unknown:
        raise FamilyError("Unknown parameter(s) for {}: {}".format(
            name, ', '.join(sorted(unknown))))
    try:
        built = info.builder(**params)
    except TypeError as e:
        raise FamilyError("{}: {}".format(name, e))
    if isinstance(built, Graph):
        built = FamilyGraph(name, tuple(sorted(params.items())), built,
                            {str(v): v for v in range(built.n)})
    return _finish(built, verify)


# Predicates

class Predicate:

    """Conjunction of named graph properties, e.g.
    ``'2-connected & claw-o-heavy & P6-c-heavy'``.

    Terms: ``complete``, ``connected``, ``2-connected``, ``hamiltonian``,
    ``order>=k``, ``order<=k``, any ``<pattern>-<condition>`` phrase such
    as ``claw-free`` or ``N-p-heavy``; a leading ``!`` negates a term.
    """

    def __init__(self, text: str = ''):
        self.text = text.strip()
        terms = [t.strip() for t in re.split(r'&|\band\b|∧', self.text)]
        self._tests = [self._term(t) for t in terms if t]

    def _term(self, term):
        if term.startswith('!'):
            inner = self._term(term[1:].strip())
            return lambda graph: not inner(graph)
        if term == 'non-hamiltonian':
            return lambda graph: not is_hamiltonian(graph).value
        simple = {
            'complete': lambda g: g.edge_count == g.n * (g.n - 1) // 2,
            'connected': is_connected,
            '2-connected': is_two_connected,
            'hamiltonian': lambda g: bool(is_hamiltonian(g).value),
        }
        if term in simple:
            return simple[term]
        match = re.match(r'^order\s*(>=|<=|==)\s*(\d+)$', term)
        if match:
            op, value = match.group(1), int(match.group(2))
            return {
                '>=': lambda g: g.n >= value,
                '<=': lambda g: g.n <= value,
                '==': lambda g: g.n == value,
            }[op]
        try:
            pattern, kind = parse_condition(term)
            spec = make_pattern(pattern)
        except ValueError:
            raise FamilyError("Unknown predicate term: {!r}".format(term))
        return lambda graph: bool(graph_satisfies(graph, spec, kind))

    def __call__(self, graph: Graph) -> bool:
        return all(test(graph) for test in self._tests)

    def __repr__(self):
        return 'Predicate({!r})'.format(self.text)


PredicateLike = Union[None, str, Callable[[Graph], bool]]


def as_predicate(predicate: PredicateLike) -> Callable[[Graph], bool]:
    if predicate is None:
        return lambda graph: True
    if isinstance(predicate, str):
        return Predicate(predicate)
    return predicate


def _describe_predicate(predicate):
    if predicate is None:
        return None
    if isinstance(predicate, str):
        return predicate
    return getattr(predicate, 'text', getattr(predicate, '__name__',
                                              repr(predicate)))


# Corpora

def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Independent-edge random graph."""
    pairs = pair_list(n)
    chosen = rng.random(len(pairs)) < p
    code = sum(1 << k for k in np.flatnonzero(chosen).tolist())
    return from_edge_code(n, code, pairs)


def _range(value):
    if isinstance(value, (tuple, list)):
        low, high = value
        return low, high
    return value, value


class FilteredSampler:

    """Rejection sampler over independent-edge random graphs.

    Orders are drawn uniformly from ``n`` (an int or inclusive range) and
    edge probabilities from ``p`` (a float or range). Iterating restarts the
    generator from ``seed``, so every pass yields the same graphs.
    """

    def __init__(self, n, p, seed: int = 0, predicate: PredicateLike = None,
                 budget: int = 1000, count: Optional[int] = None):
        if budget < 1:
            raise FamilyError("Sampling budget must be positive")
        self.n = _range(n)
        self.p = _range(p)
        self.seed = seed
        self.predicate = predicate
        self.budget = budget
        self.count = count
        self.attempts = 0
        self.accepted = 0

    def __iter__(self) -> Iterator[Graph]:
        rng = np.random.default_rng(self.seed)
        accept = as_predicate(self.predicate)
        self.attempts = self.accepted = 0
        low, high = self.n
        plow, phigh = self.p
        while self.attempts < self.budget and (
                self.count is None or self.accepted < self.count):
            self.attempts += 1
            order = int(rng.integers(low, high + 1))
            prob = plow if plow == phigh else float(rng.uniform(plow, phigh))
            graph = random_graph(order, prob, rng)
            if accept(graph):
                self.accepted += 1
                yield graph
        logger.info("Sampler accepted %d of %d graphs (%s)",
                    self.accepted, self.attempts, self.diagnostic)

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.attempts if self.attempts else 0.0

    @property
    def diagnostic(self) -> str:
        if self.attempts and not self.accepted:
            return 'no graph satisfied {!r} within {} attempts'.format(
                _describe_predicate(self.predicate), self.attempts)
        return 'rate {:.4f}'.format(self.acceptance_rate)

    def describe(self) -> dict:
        return {
            'mode': 'sampled',
            'n': list(self.n),
            'p': list(self.p),
            'seed': self.seed,
            'predicate': _describe_predicate(self.predicate),
            'budget': self.budget,
            'attempts': self.attempts,
            'accepted': self.accepted,
        }


def sample_filtered(n, p, seed: int = 0, predicate: PredicateLike = None,
                    budget: int = 1000, count: Optional[int] = None
                    ) -> FilteredSampler:
    """Random graphs that satisfy ``predicate``; see
    :class:`FilteredSampler`."""
    return FilteredSampler(n, p, seed, predicate, budget, count)


MAX_ENUMERATION_ORDER = 7


def enumerate_labeled(n: int, predicate: PredicateLike = None
                      ) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices that satisfies ``predicate``.

    Graphs are produced in increasing order of their edge code (bit ``k``
    selects the ``k``-th pair of :func:`~pyheavy.graphops.pair_list`).
    """
    if not 0 <= n <= MAX_ENUMERATION_ORDER:
        raise FamilyError("Labelled enumeration supports n <= {}, got {}"
                          .format(MAX_ENUMERATION_ORDER, n))
    accept = as_predicate(predicate)
    pairs = pair_list(n)
    for code in range(1 << len(pairs)):
        graph = from_edge_code(n, code, pairs)
        if accept(graph):
            yield graph


def enumerate_up_to(n_max: int, predicate: PredicateLike = None,
                    n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_labeled(n, predicate)


def p_family_grid(max_order: int = 14) -> List[FamilyGraph]:
    """All obstruction family members up to ``max_order`` vertices, one
    per multiset of connectors."""
    options = ['T'] + list(range(3, max_order))
    grid = []
    for xs in _multisets(options, 3):
        size = 6 + sum(1 if x == 'T' else x - 2 for x in xs)
        if size <= max_order:
            grid.append(gen_P_family(*xs))
    return grid


def _multisets(options: Sequence, k: int):
    if k == 0:
        yield ()
        return
    for i, first in enumerate(options):
        for rest in _multisets(options[i:], k - 1):
            yield (first,) + rest

