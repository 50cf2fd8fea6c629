"""
Heavy vertices, heavy pairs and the heavy-subgraph conditions.

A vertex is heavy if ``2 d(v) >= n``; a heavy pair is a nonadjacent pair
with ``d(u) + d(v) >= n``. For an induced copy ``M`` of a pattern ``S``:

- ``o``: ``M`` contains a heavy pair of the host,
- ``f``: every pair at distance 2 inside ``M`` contains a heavy vertex,
- ``c``: for every maximal clique ``C`` of ``M`` each component of
  ``M - C`` with at least two vertices contains a heavy vertex,
- ``p`` (net only): two vertices with degree sum at least ``n`` other than
  a triangle vertex and its pendant.

A graph satisfies ``S``-``k`` if every induced copy of ``S`` does.
"""

from __future__ import annotations

from pyheavy.graphops import (
    Graph, cliques_within, components, iter_bits, members, popcount)
from pyheavy.patterns import (
    InducedCopy, PatternLike, as_pattern, induced_copies, is_isomorphic,
    make_pattern)

import enum
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple, Union


class ConditionError(ValueError):
    """Condition that does not apply to the given pattern or copy."""


class ConditionKind(enum.Enum):

    FREE = 'free'
    O_HEAVY = 'o'
    F_HEAVY = 'f'
    C_HEAVY = 'c'
    P_HEAVY = 'p'

    @classmethod
    def parse(cls, value: Union[str, 'ConditionKind']) -> 'ConditionKind':
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        if text.endswith('-heavy'):
            text = text[:-len('-heavy')]
        if text == 'np':
            text = 'p'
        for kind in cls:
            if kind.value == text:
                return kind
        raise ConditionError("Unknown condition: {!r}".format(value))

    @property
    def suffix(self) -> str:
        return 'free' if self is ConditionKind.FREE else self.value + '-heavy'


@dataclass(frozen=True)
class ConditionResult:

    """Outcome of :func:`graph_satisfies`; ``witness`` is the first
    violating copy."""

    satisfied: bool
    witness: Optional[InducedCopy] = None

    def __bool__(self):
        return self.satisfied


CopyLike = Union[InducedCopy, int]


def _mask(copy: CopyLike) -> int:
    return copy.vertices if isinstance(copy, InducedCopy) else copy


def heavy_vertices(graph: Graph) -> int:
    """Bitset of the heavy vertices."""
    n = graph.n
    return sum(1 << v for v, d in enumerate(graph.degrees) if 2 * d >= n)


def is_heavy_vertex(graph: Graph, v: int) -> bool:
    return 2 * graph.degree(v) >= graph.n


def is_heavy_pair(graph: Graph, u: int, v: int) -> bool:
    if u == v:
        raise ConditionError("A heavy pair needs two distinct vertices")
    return (not graph.has_edge(u, v)
            and graph.degree(u) + graph.degree(v) >= graph.n)


def heavy_pairs(graph: Graph) -> List[Tuple[int, int]]:
    n = graph.n
    deg = graph.degrees
    return [(u, v) for u, v in graph.non_edges() if deg[u] + deg[v] >= n]


def copy_is_o_heavy(graph: Graph, copy: CopyLike) -> bool:
    mask = _mask(copy)
    adj, deg, n = graph.adj, graph.degrees, graph.n
    for u in iter_bits(mask):
        higher = mask >> (u + 1) << (u + 1)
        for v in iter_bits(higher & ~adj[u]):
            if deg[u] + deg[v] >= n:
                return True
    return False


def copy_is_f_heavy(graph: Graph, copy: CopyLike) -> bool:
    """Distances are taken inside the copy."""
    mask = _mask(copy)
    adj = graph.adj
    heavy = heavy_vertices(graph)
    for u in iter_bits(mask & ~heavy):
        higher = mask >> (u + 1) << (u + 1)
        for v in iter_bits(higher & ~adj[u] & ~heavy):
            if adj[u] & adj[v] & mask:
                return False
    return True


def copy_is_c_heavy(graph: Graph, copy: CopyLike) -> bool:
    mask = _mask(copy)
    adj = graph.adj
    heavy = heavy_vertices(graph)
    for clique in cliques_within(adj, mask):
        for part in components(adj, mask & ~clique):
            if popcount(part) >= 2 and not part & heavy:
                return False
    return True


def net_roles(graph: Graph, copy: CopyLike) -> Dict[str, int]:
    """Resolve ``a, b, c`` (triangle) and ``a1, b1, c1`` (pendants) of a
    net copy from its unique triangle."""
    mask = _mask(copy)
    adj = graph.adj
    if popcount(mask) != 6:
        raise ConditionError("A net has six vertices, got {}".format(
            popcount(mask)))
    triangle = [v for v in iter_bits(mask) if popcount(adj[v] & mask) == 3]
    tri_mask = sum(1 << v for v in triangle)
    roles = {}
    if len(triangle) == 3 and all(
            popcount(adj[v] & tri_mask) == 2 for v in triangle):
        for name, v in zip('abc', triangle):
            pendant = adj[v] & mask & ~tri_mask
            if popcount(pendant) != 1 or popcount(adj[pendant.bit_length() - 1]
                                                  & mask) != 1:
                break
            roles[name] = v
            roles[name + '1'] = pendant.bit_length() - 1
    if len(roles) != 6:
        raise ConditionError("Vertices {} do not induce a net".format(
            members(mask)))
    return roles


def _matched_pairs(roles):
    return {frozenset((roles[t], roles[t + '1'])) for t in 'abc'}


def copy_is_p_heavy_net(graph: Graph, copy: CopyLike) -> bool:
    """Adjacent pairs count as well, only matched pairs are excluded."""
    roles = net_roles(graph, copy)
    matched = _matched_pairs(roles)
    deg, n = graph.degrees, graph.n
    return any(
        deg[u] + deg[v] >= n and frozenset((u, v)) not in matched
        for u, v in combinations(sorted(roles.values()), 2))


def net_c_heavy_by_pairs(graph: Graph, copy: CopyLike) -> bool:
    """Two heavy vertices of the copy that are not a matched pair."""
    roles = net_roles(graph, copy)
    matched = _matched_pairs(roles)
    heavy = [v for v in sorted(roles.values())
             if 2 * graph.degrees[v] >= graph.n]
    return any(frozenset(pair) not in matched
               for pair in combinations(heavy, 2))


COPY_PREDICATES = {
    ConditionKind.O_HEAVY: copy_is_o_heavy,
    ConditionKind.F_HEAVY: copy_is_f_heavy,
    ConditionKind.C_HEAVY: copy_is_c_heavy,
    ConditionKind.P_HEAVY: copy_is_p_heavy_net,
}

_NET = make_pattern('N')


def graph_satisfies(graph: Graph, pattern: PatternLike,
                    kind: Union[str, ConditionKind]) -> ConditionResult:
    """Check that every induced copy of ``pattern`` passes ``kind``.

    :raises ConditionError: if ``kind`` is ``p`` and the pattern is not
        the net
    """
    kind = ConditionKind.parse(kind)
    spec = as_pattern(pattern)
    if kind is ConditionKind.P_HEAVY and not is_isomorphic(
            spec.graph, _NET.graph):
        raise ConditionError(
            "p-heavy is only defined for the net, not {}".format(spec.name))
    predicate = COPY_PREDICATES.get(kind)
    for copy in induced_copies(graph, spec):
        if predicate is None or not predicate(graph, copy):
            return ConditionResult(False, copy)
    return ConditionResult(True)


def is_claw_free(graph: Graph) -> bool:
    return graph_satisfies(graph, 'claw', ConditionKind.FREE).satisfied


def is_claw_o_heavy(graph: Graph) -> bool:
    return graph_satisfies(graph, 'claw', ConditionKind.O_HEAVY).satisfied


_CONDITION_RE = re.compile(r'^(.+?)-(free|o-heavy|f-heavy|c-heavy|p-heavy)$')


def parse_condition(text: str) -> Tuple[str, ConditionKind]:
    """Split ``'claw-o-heavy'`` into ``('claw', ConditionKind.O_HEAVY)``."""
    match = _CONDITION_RE.match(text.strip())
    if not match:
        raise ConditionError("Not a condition phrase: {!r}".format(text))
    return match.group(1), ConditionKind.parse(match.group(2))


# Implications between conditions. Each entry reads "every graph that is
# source-source_kind is also target-target_kind". Entries flagged uncertain
# are evaluated but never fail a run.

@dataclass(frozen=True)
class Implication:
    source: str
    source_kind: ConditionKind
    target: str
    target_kind: ConditionKind
    uncertain: bool = False

    def __str__(self):
        return '{}-{} => {}-{}'.format(
            self.source, self.source_kind.suffix,
            self.target, self.target_kind.suffix)


def _arrows(kind, table):
    return tuple(
        Implication(source, kind, target, kind, uncertain)
        for source, target, uncertain in table)


F_HEAVY_ARROWS = _arrows(ConditionKind.F_HEAVY, [
    ('P3', 'P4', False),
    ('P4', 'P5', False),
    ('P5', 'P6', False),
    ('P6', 'C3', False),
    ('P3', 'W', False),
    ('P4', 'Z2', False),
    ('P5', 'Z3', False),
    ('W', 'C3', True),
    ('Z2', 'C3', False),
    ('Z3', 'C3', False),
    ('P3', 'Z1', False),
    ('Z1', 'B', False),
    ('B', 'N', False),
    ('P4', 'N', False),
    ('N', 'C3', False),
])

C_HEAVY_ARROWS = _arrows(ConditionKind.C_HEAVY, [
    ('Z1', 'B', False),
    ('B', 'N', False),
    ('P4', 'P5', False),
    ('P5', 'P6', False),
    ('P4', 'B', False),
    ('P5', 'W', False),
    ('Z2', 'W', False),
    ('W', 'C3', False),
    ('N', 'C3', False),
    ('P6', 'C3', False),
    ('Z3', 'C3', False),
    ('C3', 'P3', True),
    ('P3', 'C3', True),
])

STATED_IMPLICATIONS = tuple(
    Implication(source, ConditionKind(a), target, ConditionKind(b))
    for source, a, target, b in [
        ('claw', 'f', 'claw', 'o'),
        ('P3', 'o', 'P3', 'f'),
        ('N', 'c', 'N', 'p'),
        ('N', 'free', 'N', 'p'),
        ('Z2', 'free', 'Z2', 'c'),
        ('P5', 'free', 'P5', 'o'),
    ])
