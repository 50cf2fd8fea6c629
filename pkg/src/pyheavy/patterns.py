"""
Small named graphs and the enumeration of their induced copies.

Patterns are addressed by short names such as ``"P4"``, ``"Z2"``, ``"B11"``,
``"N111"``, ``"W"``, ``"H"``, ``"K112"`` or ``"claw"``; see
:func:`make_pattern`.
"""

from __future__ import annotations

from pyheavy.graphops import (
    Graph, build_graph, iter_bits, members, popcount)

import re
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Optional, Tuple, Union


class PatternError(ValueError):
    """Unknown pattern name or invalid pattern parameter."""


@dataclass(frozen=True)
class PatternSpec:

    """A named small graph with optional role labels for its vertices.

    ``kind`` is the family (``'P'``, ``'C'``, ``'K'``, ``'claw'``, ``'Z'``,
    ``'B'``, ``'N'``, ``'H'``, ``'K112'``, ``'S'``) and ``params`` its
    integer parameters. Bull, net and wounded are stored as ``B(1,1)``,
    ``N(1,1,1)`` and ``B(1,2)``.
    """

    kind: str
    params: Tuple[int, ...]
    name: str
    graph: Graph = field(repr=False)
    roles: Dict[int, str] = field(default_factory=dict, compare=False,
                                  repr=False)

    @property
    def order(self) -> int:
        return self.graph.n

    def vertex(self, role: str) -> int:
        """Pattern vertex carrying the given role label."""
        for v, label in self.roles.items():
            if label == role:
                return v
        raise PatternError("{} has no vertex {!r}".format(self.name, role))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class InducedCopy:

    """Vertex set of ``host`` inducing a copy of some pattern.

    ``embedding[p]`` is the host vertex playing pattern vertex ``p``.
    """

    host: Graph = field(repr=False)
    vertices: int
    embedding: Optional[Tuple[int, ...]] = None
    label: Optional[str] = None

    def members(self) -> List[int]:
        return members(self.vertices)

    @property
    def size(self) -> int:
        return popcount(self.vertices)

    def role_map(self, pattern: PatternSpec) -> Dict[str, int]:
        """Map role labels of ``pattern`` to host vertices."""
        if self.embedding is None:
            raise PatternError("Copy carries no embedding")
        return {
            label: self.embedding[v]
            for v, label in pattern.roles.items()
        }


PatternLike = Union[PatternSpec, Graph, str]


def _triangle_with_tails(lengths):
    edges = [(0, 1), (0, 2), (1, 2)]
    roles = {0: 'a', 1: 'b', 2: 'c'}
    count = 3
    for anchor, (base, length) in enumerate(zip('abc', lengths)):
        prev = anchor
        for i in range(1, length + 1):
            edges.append((prev, count))
            roles[count] = '{}{}'.format(base, i)
            prev = count
            count += 1
    return build_graph(count, edges), roles


def _star(k):
    roles = {0: 'center'}
    roles.update({i: 'leaf{}'.format(i) for i in range(1, k + 1)})
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)]), roles


def _require(condition, message, *args):
    if not condition:
        raise PatternError(message.format(*args))


def _build(kind, params):
    if kind == 'P':
        i, = params
        _require(i >= 1, "Path order must be at least 1, got {}", i)
        return ('P{}'.format(i),
                build_graph(i, [(v, v + 1) for v in range(i - 1)]), {})
    if kind == 'C':
        i, = params
        _require(i >= 3, "Cycle order must be at least 3, got {}", i)
        return ('C{}'.format(i),
                build_graph(i, [(v, (v + 1) % i) for v in range(i)]), {})
    if kind == 'K':
        i, = params
        _require(i >= 1, "Clique order must be at least 1, got {}", i)
        return ('K{}'.format(i),
                build_graph(i, combinations(range(i), 2)), {})
    if kind == 'S':
        k, = params
        _require(k >= 1, "Star needs at least one leaf, got {}", k)
        graph, roles = _star(k)
        return ('claw' if k == 3 else 'S{}'.format(k)), graph, roles
    if kind == 'Z':
        i, = params
        _require(i >= 1, "Z_i needs i >= 1, got {}", i)
        graph, roles = _triangle_with_tails((i, 0, 0))
        return 'Z{}'.format(i), graph, roles
    if kind == 'B':
        i, j = params
        _require(i >= 1 and j >= 1, "B_ij needs i, j >= 1, got {}", params)
        graph, roles = _triangle_with_tails((i, j, 0))
        name = {(1, 1): 'B', (1, 2): 'W', (2, 1): 'W'}.get(
            (i, j), 'B{},{}'.format(i, j))
        return name, graph, roles
    if kind == 'N':
        i, j, k = params
        _require(min(params) >= 1, "N_ijk needs i, j, k >= 1, got {}", params)
        graph, roles = _triangle_with_tails((i, j, k))
        name = 'N' if params == (1, 1, 1) else 'N{},{},{}'.format(i, j, k)
        return name, graph, roles
    if kind == 'H':
        graph = build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        return 'H', graph, {0: 'center'}
    if kind == 'K112':
        graph = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        return 'K112', graph, {}
    raise PatternError("Unknown pattern kind: {!r}".format(kind))


_ALIASES = {
    'claw': ('S', (3,)),
    'bull': ('B', (1, 1)),
    'b': ('B', (1, 1)),
    'net': ('N', (1, 1, 1)),
    'n': ('N', (1, 1, 1)),
    'wounded': ('B', (1, 2)),
    'w': ('B', (1, 2)),
    'hourglass': ('H', ()),
    'h': ('H', ()),
    'k112': ('K112', ()),
    'diamond': ('K112', ()),
}

_NAME_PATTERNS = [
    (re.compile(r'^([PCKZ])(\d+)$'), None),
    (re.compile(r'^S(\d+)$'), 'S'),
    (re.compile(r'^K1,(\d+)$'), 'S'),
    (re.compile(r'^B(\d)(\d)$'), 'B'),
    (re.compile(r'^B(\d+),(\d+)$'), 'B'),
    (re.compile(r'^N(\d)(\d)(\d)$'), 'N'),
    (re.compile(r'^N(\d+),(\d+),(\d+)$'), 'N'),
]


def parse_pattern_name(name: str) -> Tuple[str, Tuple[int, ...]]:
    """Split a pattern name into ``(kind, params)``.

    >>> parse_pattern_name('N112')
    ('N', (1, 1, 2))
    """
    text = name.strip().replace(' ', '').replace('_', '')
    alias = _ALIASES.get(text.lower())
    if alias is not None:
        return alias
    for regex, kind in _NAME_PATTERNS:
        match = regex.match(text.upper())
        if match:
            groups = match.groups()
            if kind is None:
                return groups[0], (int(groups[1]),)
            return kind, tuple(int(g) for g in groups)
    raise PatternError("Unknown pattern name: {!r}".format(name))


def make_pattern(kind: str, *params: int) -> PatternSpec:
    """Construct a catalog pattern.

    Either pass a full name (``make_pattern('Z2')``) or a kind and its
    parameters (``make_pattern('Z', 2)``).

    :raises PatternError: for unknown names or invalid parameters
    """
    if not params:
        kind, params = parse_pattern_name(kind)
    params = tuple(int(p) for p in params)
    expected = {'P': 1, 'C': 1, 'K': 1, 'S': 1, 'Z': 1, 'B': 2, 'N': 3,
                'H': 0, 'K112': 0}
    if kind not in expected:
        raise PatternError("Unknown pattern kind: {!r}".format(kind))
    if len(params) != expected[kind]:
        raise PatternError("Pattern {} takes {} parameter(s), got {}".format(
            kind, expected[kind], params))
    name, graph, roles = _build(kind, params)
    return PatternSpec(kind, params, name, graph, roles)


def as_pattern(pattern: PatternLike) -> PatternSpec:
    if isinstance(pattern, PatternSpec):
        return pattern
    if isinstance(pattern, Graph):
        return PatternSpec('graph', (), 'G{}'.format(pattern.n), pattern)
    return make_pattern(pattern)


# Patterns used by the harness when it needs "the catalog".
CATALOG = (
    'P3', 'P4', 'P5', 'P6', 'C3', 'claw', 'Z1', 'Z2', 'Z3',
    'B', 'W', 'N', 'H', 'K112',
)


def _search_order(graph):
    """Pattern vertices ordered so that each one touches an earlier one
    whenever its component allows it."""
    adj = graph.adj
    degrees = graph.degrees
    order = []
    placed = 0
    while popcount(placed) < graph.n:
        rest = [v for v in range(graph.n) if not placed >> v & 1]
        start = max(rest, key=lambda v: degrees[v])
        order.append(start)
        placed |= 1 << start
        frontier = adj[start] & ~placed
        while frontier:
            v = max(iter_bits(frontier), key=lambda u: (
                popcount(adj[u] & placed), degrees[u]))
            order.append(v)
            placed |= 1 << v
            frontier = 0
            for u in order:
                frontier |= adj[u]
            frontier &= ~placed
    return order


def induced_copies(graph: Graph, pattern: PatternLike) -> Iterator[InducedCopy]:
    """Yield each vertex set of ``graph`` that induces ``pattern``, once.

    The embedding of the first isomorphism found for a vertex set is
    attached to the copy.
    """
    spec = as_pattern(pattern)
    small = spec.graph
    k = small.n
    if k == 0 or k > graph.n:
        return
    order = _search_order(small)
    padj = small.adj
    hadj = graph.adj
    hdeg = graph.degrees
    candidates = [
        sum(1 << v for v in range(graph.n) if hdeg[v] >= small.degrees[p])
        for p in range(k)
    ]
    phi = [0] * k
    seen = set()

    def extend(depth, used):
        if depth == k:
            if used not in seen:
                seen.add(used)
                yield InducedCopy(graph, used, tuple(phi))
            return
        p = order[depth]
        pool = candidates[p] & ~used
        for q in order[:depth]:
            if padj[p] >> q & 1:
                pool &= hadj[phi[q]]
            else:
                pool &= ~hadj[phi[q]]
        for v in iter_bits(pool):
            phi[p] = v
            yield from extend(depth + 1, used | 1 << v)

    yield from extend(0, 0)


def count_copies(graph: Graph, pattern: PatternLike) -> int:
    return sum(1 for _ in induced_copies(graph, pattern))


def is_S_free(graph: Graph, pattern: PatternLike) -> bool:
    return next(induced_copies(graph, pattern), None) is None


def is_isomorphic(first: Graph, second: Graph) -> bool:
    if first.n != second.n or first.edge_count != second.edge_count:
        return False
    if sorted(first.degrees) != sorted(second.degrees):
        return False
    return not is_S_free(second, first)


def is_induced_subgraph(small: PatternLike, big: PatternLike) -> bool:
    """Whether ``small`` occurs as an induced subgraph of ``big``."""
    return not is_S_free(as_pattern(big).graph, small)


# Obstruction family: two triangles joined by three connectors


def _triangles(graph):
    adj = graph.adj
    found = []
    for u in range(graph.n):
        for v in iter_bits(adj[u] >> (u + 1) << (u + 1)):
            for w in iter_bits(adj[u] & adj[v] >> (v + 1) << (v + 1)):
                found.append((u, v, w))
    return found


def _induced_paths(adj, a, b, used):
    """Internal vertex sets of induced ``a``-``b`` paths that avoid, and
    see no neighbour in, ``used`` apart from their ends."""
    blocked = used & ~(1 << a) & ~(1 << b)

    def walk(end, inner):
        for v in iter_bits(adj[end] & ~used & ~inner):
            if adj[v] & blocked:
                continue
            if adj[v] & inner & ~(1 << end):
                continue
            if end != a and adj[v] >> a & 1:
                continue
            if adj[v] >> b & 1:
                yield inner | 1 << v
            else:
                yield from walk(v, inner | 1 << v)

    return walk(a, 0)


def _connect(adj, pairs, used, labels):
    if len(labels) == len(pairs):
        return used, labels
    a, b = pairs[len(labels)]
    if adj[a] >> b & 1:
        ends = 1 << a | 1 << b
        for t in iter_bits(adj[a] & adj[b] & ~used):
            if adj[t] & used & ~ends:
                continue
            found = _connect(adj, pairs, used | 1 << t, labels + ['T'])
            if found:
                return found
        return None
    for inner in _induced_paths(adj, a, b, used):
        label = str(popcount(inner) + 2)
        found = _connect(adj, pairs, used | inner, labels + [label])
        if found:
            return found
    return None


def find_induced_P_member(graph: Graph) -> Optional[InducedCopy]:
    """First induced member of the two-triangle obstruction family.

    Members consist of two disjoint triangles ``a1a2a3`` and ``b1b2b3``
    where each pair ``a_i, b_i`` is joined either by an induced path with
    at least one inner vertex or by the edge ``a_ib_i`` plus a common
    neighbour. The returned copy is labelled like ``'P(T,3,T)'``.
    """
    adj = graph.adj
    triangles = _triangles(graph)
    for i, first in enumerate(triangles):
        first_mask = 1 << first[0] | 1 << first[1] | 1 << first[2]
        for second in triangles[i + 1:]:
            second_mask = 1 << second[0] | 1 << second[1] | 1 << second[2]
            if first_mask & second_mask:
                continue
            for matched in permutations(second):
                pairs = list(zip(first, matched))
                if any(adj[a] >> b & 1
                       for k, (a, _) in enumerate(pairs)
                       for l, (_, b) in enumerate(pairs) if k != l):
                    continue
                found = _connect(adj, pairs, first_mask | second_mask, [])
                if found:
                    vertices, labels = found
                    return InducedCopy(
                        graph, vertices,
                        label='P({})'.format(','.join(labels)))
    return None
