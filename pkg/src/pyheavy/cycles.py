"""
Exact cycle oracles: hamiltonicity and circumference with certificates.

Both run a dynamic program over ``(vertex subset, end vertex)`` states for
paths that start at a fixed vertex. Their cost grows like ``2^n``, so the
order of accepted graphs is capped; the caps can be changed through the
environment variables ``PYHEAVY_MAX_HAMILTONIAN_ORDER`` and
``PYHEAVY_MAX_CIRCUMFERENCE_ORDER`` or per call with ``max_order``.
"""

from __future__ import annotations

from pyheavy.graphops import (
    Graph, components, is_two_connected, iter_bits, members, popcount)

import numpy as np

import logging
import os
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple


logger = logging.getLogger(__name__)

DEFAULT_MAX_HAMILTONIAN_ORDER = 24
DEFAULT_MAX_CIRCUMFERENCE_ORDER = 20


class OracleLimitError(ValueError):
    """Graph order above the configured oracle cap."""


@dataclass(frozen=True)
class CycleCertificate:

    """A cycle given by its vertices in cyclic order."""

    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_valid(self, graph: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        return all(graph.has_edge(vs[i - 1], vs[i]) for i in range(len(vs)))


class OracleResult(NamedTuple):
    value: object
    certificate: Optional[CycleCertificate] = None


def max_order(kind: str, override: Optional[int] = None) -> int:
    """Configured order cap for ``kind`` in ``{'hamiltonian',
    'circumference'}``."""
    if override is not None:
        return int(override)
    if kind == 'hamiltonian':
        return int(os.environ.get(
            'PYHEAVY_MAX_HAMILTONIAN_ORDER', DEFAULT_MAX_HAMILTONIAN_ORDER))
    if kind == 'circumference':
        return int(os.environ.get(
            'PYHEAVY_MAX_CIRCUMFERENCE_ORDER',
            DEFAULT_MAX_CIRCUMFERENCE_ORDER))
    raise ValueError("Unknown oracle: {!r}".format(kind))


def _check_order(graph, kind, override):
    limit = max_order(kind, override)
    if graph.n > limit:
        raise OracleLimitError(
            "The {} oracle accepts at most {} vertices, got {}".format(
                kind, limit, graph.n))


# Tables over at least this many vertices are filled with numpy.
VECTOR_MIN_SIZE = 12


def _subset_sizes(m: int) -> np.ndarray:
    sizes = np.zeros(1 << m, dtype=np.uint8)
    for i in range(m):
        sizes[1 << i:2 << i] = sizes[:1 << i] + 1
    return sizes


class _PathTable:

    """Paths starting at ``start`` through the vertices in ``others``.

    ``reach[S]`` is the set of end vertices (as bits of the compressed
    index) of paths from ``start`` whose other vertices are exactly ``S``.
    """

    def __init__(self, adj: Sequence[int], start: int, others: List[int]):
        index = {v: i for i, v in enumerate(others)}
        self.start = start
        self.others = others
        self.rows = [
            sum(1 << index[u] for u in iter_bits(adj[v]) if u in index)
            for v in others
        ]
        self.first = sum(
            1 << index[u] for u in iter_bits(adj[start]) if u in index)
        m = len(others)
        self.dtype = np.uint32 if m <= 32 else np.uint64
        self.sizes = _subset_sizes(m)
        if m >= VECTOR_MIN_SIZE:
            self.reach = self._fill_layers(m)
        else:
            self.reach = np.array(self._fill_loop(m), dtype=self.dtype)

    def _fill_loop(self, m: int) -> List[int]:
        full = (1 << m) - 1
        reach = [0] * (1 << m)
        for i in iter_bits(self.first):
            reach[1 << i] = 1 << i
        rows = self.rows
        for subset in range(1, 1 << m):
            ends = reach[subset]
            if not ends:
                continue
            free = full & ~subset
            for e in iter_bits(ends):
                for w in iter_bits(rows[e] & free):
                    reach[subset | 1 << w] |= 1 << w
        return reach

    def _fill_layers(self, m: int) -> np.ndarray:
        """Process subsets in layers of equal size, one vectorised update
        per layer and added vertex."""
        dtype = self.dtype
        reach = np.zeros(1 << m, dtype=dtype)
        for i in iter_bits(self.first):
            reach[1 << i] = 1 << i
        rows = [dtype(row) for row in self.rows]
        for size in range(1, m):
            layer = np.flatnonzero((self.sizes == size) & (reach != 0))
            for w in range(m):
                bit = 1 << w
                subsets = layer[layer & bit == 0]
                subsets = subsets[reach[subsets] & rows[w] != 0]
                reach[subsets | bit] |= dtype(bit)
        return reach

    def closing_ends(self, subset: int) -> int:
        return int(self.reach[subset]) & self.first

    def longest_closing(self) -> Optional[Tuple[int, int]]:
        """Largest subset of at least two vertices with a path that closes
        into a cycle, and one of its closing ends."""
        first = self.dtype(self.first)
        closing = np.flatnonzero((self.reach & first != 0) & (self.sizes >= 2))
        if closing.size == 0:
            return None
        subset = int(closing[np.argmax(self.sizes[closing])])
        return subset, next(iter_bits(self.closing_ends(subset)))

    def cycle(self, subset: int, end: int) -> CycleCertificate:
        """Rebuild the cycle through ``start`` closing at ``end``."""
        path = [end]
        while subset & (subset - 1):
            subset &= ~(1 << end)
            end = next(iter_bits(int(self.reach[subset]) & self.rows[end]))
            path.append(end)
        path.reverse()
        return CycleCertificate(
            (self.start,) + tuple(self.others[i] for i in path))


def is_hamiltonian(graph: Graph, max_order: Optional[int] = None
                   ) -> OracleResult:
    """Decide whether ``graph`` has a hamiltonian cycle.

    :return: ``(True, certificate)`` or ``(False, None)``
    :raises OracleLimitError: if the order exceeds the cap
    """
    _check_order(graph, 'hamiltonian', max_order)
    n = graph.n
    if n < 3 or min(graph.degrees) < 2 or not is_two_connected(graph):
        return OracleResult(False)
    table = _PathTable(graph.adj, 0, list(range(1, n)))
    full = (1 << (n - 1)) - 1
    ends = table.closing_ends(full)
    if not ends:
        return OracleResult(False)
    end = next(iter_bits(ends))
    return OracleResult(True, table.cycle(full, end))


def circumference(graph: Graph, max_order: Optional[int] = None
                  ) -> OracleResult:
    """Length of a longest cycle, 0 for forests.

    Cycles are grouped by their smallest vertex ``s`` and searched among the
    vertices above ``s`` that share a component with it.

    :return: ``(length, certificate)``
    :raises OracleLimitError: if the order exceeds the cap
    """
    _check_order(graph, 'circumference', max_order)
    n = graph.n
    adj = graph.adj
    best = OracleResult(0)
    for start in range(n):
        above = graph.full >> (start + 1) << (start + 1)
        part = next(p for p in components(adj, above | 1 << start)
                    if p >> start & 1)
        others = members(part & ~(1 << start))
        if len(others) + 1 <= max(best.value, 2):
            continue
        table = _PathTable(adj, start, others)
        found = table.longest_closing()
        if found is not None and popcount(found[0]) + 1 > best.value:
            best = OracleResult(popcount(found[0]) + 1, table.cycle(*found))
        if best.value == n:
            break
    return best


# Slow reference oracles

def naive_is_hamiltonian(graph: Graph) -> bool:
    """Try every cyclic order; only for tiny graphs."""
    n = graph.n
    if n < 3:
        return False
    return any(_is_cycle(graph, (0,) + rest)
               for rest in permutations(range(1, n)) if rest[0] < rest[-1])


def naive_circumference(graph: Graph) -> int:
    for length in range(graph.n, 2, -1):
        for chosen in combinations(range(graph.n), length):
            head, tail = chosen[0], chosen[1:]
            if any(_is_cycle(graph, (head,) + rest)
                   for rest in permutations(tail) if rest[0] < rest[-1]):
                return length
    return 0


def _is_cycle(graph, order):
    adj = graph.adj
    return all(adj[order[i - 1]] >> order[i] & 1 for i in range(len(order)))


# Classical sufficient conditions

@dataclass(frozen=True)
class ClassicalReport:

    applies: Dict[str, bool]
    hamiltonian: Optional[bool] = None
    certificate: Optional[CycleCertificate] = field(default=None, repr=False)

    @property
    def violations(self) -> List[str]:
        """Conditions that hold although the graph is not hamiltonian."""
        if self.hamiltonian is not False:
            return []
        return [name for name, ok in self.applies.items() if ok]

    def to_dict(self):
        return {
            'applies': self.applies,
            'hamiltonian': self.hamiltonian,
            'violations': self.violations,
        }


def dirac_ore_fan_sanity(graph: Graph) -> ClassicalReport:
    """Check Dirac's, Ore's and Fan's conditions and, if one of them holds,
    that the graph is hamiltonian."""
    n = graph.n
    adj, deg = graph.adj, graph.degrees
    heavy = [2 * d >= n for d in deg]
    non_edges = graph.non_edges()
    applies = {
        'dirac': n >= 3 and all(heavy),
        'ore': n >= 3 and all(deg[u] + deg[v] >= n for u, v in non_edges),
        'fan': is_two_connected(graph) and all(
            heavy[u] or heavy[v]
            for u, v in non_edges if adj[u] & adj[v]),
    }
    if not any(applies.values()):
        return ClassicalReport(applies)
    value, certificate = is_hamiltonian(graph)
    if not value:
        logger.warning("Classical condition without hamiltonian cycle: %s",
                       [k for k, v in applies.items() if v])
    return ClassicalReport(applies, value, certificate)
