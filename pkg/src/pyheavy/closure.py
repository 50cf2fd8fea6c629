"""
Local completions, the r- and c-closure and the regions of a graph.

The completion at ``x`` joins every pair of neighbours of ``x``. The
r-closure completes at vertices whose neighbourhood induces a connected,
non-complete graph until none is left; it is defined for claw-free graphs.
The c-closure does the same for claw-o-heavy graphs with the wider notion
of :func:`c_eligible`. Eligibility is always evaluated on the current graph
of the sequence.
"""

from __future__ import annotations

from pyheavy.graphops import (
    Edge, Graph, components, induced_subgraph, is_clique,
    is_nonseparable, iter_bits, maximal_cliques, members, popcount)
from pyheavy.heavy import heavy_pairs, is_claw_free, is_claw_o_heavy
from pyheavy.patterns import is_S_free

import numpy as np

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Tuple


logger = logging.getLogger(__name__)

KINDS = ('r', 'c')


class PreconditionError(ValueError):
    """Closure input outside the class the closure is defined on."""


def _kind(kind: str) -> str:
    kind = str(kind).lower()
    if kind not in KINDS:
        raise ValueError("Closure kind must be 'r' or 'c', got {!r}".format(
            kind))
    return kind


def check_precondition(graph: Graph, kind: str = 'c') -> None:
    """Raise :class:`PreconditionError` unless ``graph`` is claw-free (r)
    or claw-o-heavy (c)."""
    if _kind(kind) == 'r':
        if not is_claw_free(graph):
            raise PreconditionError("The r-closure needs a claw-free graph")
    elif not is_claw_o_heavy(graph):
        raise PreconditionError("The c-closure needs a claw-o-heavy graph")


def r_eligible(graph: Graph, x: int) -> bool:
    nbrs = graph.neighbors(x)
    adj = graph.adj
    return (not is_clique(adj, nbrs)
            and len(components(adj, nbrs)) == 1)


def c_eligible(graph: Graph, x: int, allow_singletons: bool = True) -> bool:
    """Whether ``x`` is c-eligible in ``graph``.

    Inside ``N(x)`` every heavy pair of ``graph`` is turned into an edge.
    ``x`` is eligible if ``N(x)`` is not a clique and the result is either
    connected, or two disjoint cliques ``C1, C2`` together with a vertex
    ``z`` forming a heavy pair with ``x`` and adjacent to both cliques.

    :param allow_singletons: whether ``C1`` or ``C2`` may be one vertex
    """
    nbrs = graph.neighbors(x)
    adj, deg, n = graph.adj, graph.degrees, graph.n
    if is_clique(adj, nbrs):
        return False
    star = {}
    for u in iter_bits(nbrs):
        row = adj[u] & nbrs
        for v in iter_bits(nbrs & ~row & ~(1 << u)):
            if deg[u] + deg[v] >= n:
                row |= 1 << v
        star[u] = row
    parts = components(star, nbrs)
    if len(parts) == 1:
        return True
    if len(parts) != 2 or not all(is_clique(star, part) for part in parts):
        return False
    if not allow_singletons and min(map(popcount, parts)) == 1:
        return False
    first, second = parts
    others = graph.full & ~nbrs & ~(1 << x)
    return any(
        deg[x] + deg[z] >= n and adj[z] & first and adj[z] & second
        for z in iter_bits(others))


def missing_edges_at(graph: Graph, x: int) -> List[Edge]:
    adj = graph.adj
    nbrs = graph.neighbors(x)
    return [
        (u, v)
        for u in iter_bits(nbrs)
        for v in iter_bits(nbrs >> (u + 1) << (u + 1) & ~adj[u])
    ]


def complete_at(graph: Graph, x: int) -> Graph:
    """Join all pairs of neighbours of ``x``."""
    return graph.add_edges(missing_edges_at(graph, x))


_ELIGIBILITY = {'r': r_eligible, 'c': c_eligible}


def eligible_vertices(graph: Graph, kind: str = 'c') -> List[int]:
    test = _ELIGIBILITY[_kind(kind)]
    return [x for x in range(graph.n) if test(graph, x)]


@dataclass(frozen=True)
class ClosureStep:
    vertex: int
    added: Tuple[Edge, ...]


@dataclass(frozen=True)
class ClosureTrace:

    """Ordered completion steps from a graph to its closure."""

    kind: str
    steps: Tuple[ClosureStep, ...] = ()

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def graphs(self, start: Graph) -> Iterator[Graph]:
        """Intermediate graphs after each step, starting from ``start``."""
        current = start
        for step in self.steps:
            current = current.add_edges(step.added)
            yield current

    @property
    def added_edges(self) -> List[Edge]:
        return [edge for step in self.steps for edge in step.added]

    def to_dict(self):
        return {
            'kind': self.kind,
            'steps': [
                {'vertex': step.vertex, 'added': [list(e) for e in step.added]}
                for step in self.steps
            ],
        }


class ClosureResult(NamedTuple):
    graph: Graph
    trace: ClosureTrace


Policy = Callable[[Graph, List[int]], int]


def make_policy(policy='smallest') -> Policy:
    """Build a selection policy from a name.

    Accepted values are ``'smallest'``, ``'largest'``, ``'random:<seed>'``,
    an integer seed, or a callable ``(graph, candidates) -> vertex``.
    """
    if callable(policy):
        return policy
    if isinstance(policy, int):
        policy = 'random:{}'.format(policy)
    if policy == 'smallest':
        return lambda graph, candidates: candidates[0]
    if policy == 'largest':
        return lambda graph, candidates: candidates[-1]
    if isinstance(policy, str) and policy.startswith('random:'):
        try:
            seed = int(policy.split(':', 1)[1])
        except ValueError:
            raise ValueError("Invalid policy seed: {!r}".format(policy))
        rng = np.random.default_rng(seed)
        return lambda graph, candidates: candidates[
            int(rng.integers(len(candidates)))]
    raise ValueError("Unknown selection policy: {!r}".format(policy))


def closure(graph: Graph, kind: str = 'c', policy='smallest',
            check: bool = True) -> ClosureResult:
    """Compute the r- or c-closure of ``graph``.

    :param kind: ``'r'`` or ``'c'``
    :param policy: eligible vertex selection, see :func:`make_policy`
    :param check: verify that the input is claw-free (r) or claw-o-heavy (c)
    :return: the closed graph and the trace of completions
    :raises PreconditionError: if ``check`` fails
    """
    kind = _kind(kind)
    if check:
        check_precondition(graph, kind)
    choose = make_policy(policy)
    test = _ELIGIBILITY[kind]
    steps = []
    current = graph
    while True:
        candidates = [x for x in range(current.n) if test(current, x)]
        if not candidates:
            break
        x = choose(current, candidates)
        if x not in candidates:
            raise ValueError("Policy chose non-eligible vertex {}".format(x))
        added = tuple(missing_edges_at(current, x))
        current = current.add_edges(added)
        steps.append(ClosureStep(x, added))
        logger.debug("%s-closure step at %d adds %d edges",
                     kind, x, len(added))
    return ClosureResult(current, ClosureTrace(kind, tuple(steps)))


def is_closed(graph: Graph, kind: str = 'c') -> bool:
    return not eligible_vertices(graph, kind)


def smaller_k112_free_supergraph(graph: Graph, bound: int) -> Optional[Graph]:
    """Search a ``K_{1,1,2}``-free supergraph with fewer than ``bound``
    edges by trying all edge additions in increasing number."""
    missing = graph.non_edges()
    for count in range(0, bound - graph.edge_count):
        for extra in combinations(missing, count):
            candidate = graph.add_edges(extra)
            if is_S_free(candidate, 'K112'):
                return candidate
    return None


# Shape of a closed graph

@dataclass(frozen=True)
class ShapeReport:

    checks: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> List[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def to_dict(self):
        return dict(self.checks, passed=self.passed)


def cliques_per_vertex(graph: Graph) -> List[int]:
    counts = [0] * graph.n
    for clique in maximal_cliques(graph):
        for v in iter_bits(clique):
            counts[v] += 1
    return counts


def check_closed_shape(graph: Graph, kind: str = 'c') -> ShapeReport:
    """Structural checks expected of a closure output.

    Every closure is claw-free and ``K_{1,1,2}``-free and each vertex lies
    in at most two maximal cliques. A c-closure additionally has no heavy
    pair and neither r- nor c-eligible vertices.
    """
    kind = _kind(kind)
    checks = {
        'claw-free': is_S_free(graph, 'claw'),
        'K112-free': is_S_free(graph, 'K112'),
        'at-most-two-cliques': max(cliques_per_vertex(graph), default=0) <= 2,
        'no-r-eligible': not eligible_vertices(graph, 'r'),
    }
    if kind == 'c':
        checks['no-heavy-pair'] = not heavy_pairs(graph)
        checks['no-c-eligible'] = not eligible_vertices(graph, 'c')
    return ShapeReport(checks)


# Regions

@dataclass(frozen=True)
class Region:

    """Subgraph of the original graph induced by a maximal clique of its
    c-closure."""

    clique: int
    interior: int
    frontier: int
    induced: Graph = field(repr=False)

    def members(self) -> List[int]:
        return members(self.clique)


@dataclass(frozen=True)
class RegionMap:
    original: Graph = field(repr=False)
    closure: Graph = field(repr=False)
    regions: Tuple[Region, ...]
    roles: Tuple[str, ...]
    anomalies: Tuple[int, ...]

    def to_dict(self):
        return {
            'regions': [r.members() for r in self.regions],
            'roles': list(self.roles),
            'anomalies': list(self.anomalies),
        }


def regions(graph: Graph, check: bool = True) -> RegionMap:
    """Regions of a claw-o-heavy graph.

    Vertices in one region are ``'interior'``, in two ``'frontier'``;
    vertices in more regions are listed in ``anomalies``.
    """
    closed = closure(graph, 'c', check=check).graph
    cliques = maximal_cliques(closed)
    counts = [0] * graph.n
    for clique in cliques:
        for v in iter_bits(clique):
            counts[v] += 1
    interior = sum(1 << v for v, c in enumerate(counts) if c == 1)
    frontier = sum(1 << v for v, c in enumerate(counts) if c == 2)
    roles = tuple(
        {1: 'interior', 2: 'frontier'}.get(c, 'anomaly') for c in counts)
    anomalies = tuple(v for v, c in enumerate(counts) if c > 2)
    if anomalies:
        logger.warning("Vertices in more than two regions: %s", anomalies)
    return RegionMap(
        original=graph,
        closure=closed,
        regions=tuple(
            Region(clique, clique & interior, clique & frontier,
                   induced_subgraph(graph, clique))
            for clique in cliques),
        roles=roles,
        anomalies=anomalies,
    )


def _joined_through(adj, u, v, inner):
    allowed = inner | 1 << u | 1 << v
    return any(part >> u & 1 and part >> v & 1
               for part in components(adj, allowed))


def region_lemma_violations(graph: Graph,
                            region_map: Optional[RegionMap] = None
                            ) -> List[str]:
    """Check the structure of every region against the original graph.

    1. each region is nonseparable,
    2. each frontier vertex has an interior neighbour in its region, unless
       the region is complete and has no interior vertex,
    3. any two vertices of a region are joined by an induced path whose
       inner vertices are interior vertices of the region.

    :return: human readable descriptions of the failed clauses
    """
    if region_map is None:
        region_map = regions(graph)
    adj = graph.adj
    problems = []
    for region in region_map.regions:
        clique = region.clique
        name = members(clique)
        if not is_nonseparable(adj, clique):
            problems.append("region {} is separable".format(name))
        trivial = region.interior == 0 and is_clique(adj, clique)
        for v in iter_bits(region.frontier):
            if not trivial and not adj[v] & region.interior:
                problems.append(
                    "frontier vertex {} of region {} has no interior "
                    "neighbour".format(v, name))
        for u, v in combinations(name, 2):
            if adj[u] >> v & 1:
                continue
            if not _joined_through(adj, u, v, region.interior):
                problems.append(
                    "no interior path between {} and {} in region {}".format(
                        u, v, name))
    return problems
