"""
Simple undirected graphs with bitset adjacency rows.

Vertex subsets are plain python ints used as bitsets over ``0..n-1`` (bit
``v`` set means vertex ``v`` is a member). :func:`members`, :func:`bitset`
and :func:`popcount` convert between the two representations.
"""

from __future__ import annotations

import networkx as nx

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple


MAX_ORDER = 64

VertexSet = int
Edge = Tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or vertex argument."""


class Graph6Error(GraphError):
    """Malformed graph6 text. ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__("{} (at byte {})".format(message, offset))
        self.offset = offset


def popcount(bits: int) -> int:
    return bin(bits).count('1')


def iter_bits(bits: int) -> Iterator[int]:
    """Iterate the members of a bitset in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def members(bits: int) -> List[int]:
    return list(iter_bits(bits))


def bitset(vertices: Iterable[int]) -> VertexSet:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


class Graph:

    """
    Immutable simple undirected graph on the vertices ``0..n-1``.

    Row ``adj[v]`` is the bitset of neighbours of ``v``. Edge additions
    return new graphs; see :meth:`add_edges`.
    """

    __slots__ = ('_adj', '_edge_count', '_degrees', '_hash')

    def __init__(self, adj: Sequence[int]):
        adj = tuple(adj)
        n = len(adj)
        if n > MAX_ORDER:
            raise GraphError(
                "Graphs are limited to {} vertices, got {}".format(
                    MAX_ORDER, n))
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row < 0 or row & ~full:
                raise GraphError(
                    "Row {} refers to vertices outside 0..{}".format(v, n - 1))
            if row >> v & 1:
                raise GraphError("Self-loop at vertex {}".format(v))
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(
                        "Asymmetric adjacency between {} and {}".format(u, v))
        self._init(adj)

    def _init(self, adj):
        self._adj = adj
        self._degrees = tuple(popcount(row) for row in adj)
        self._edge_count = sum(self._degrees) // 2
        self._hash = None

    @classmethod
    def _from_rows(cls, adj):
        graph = cls.__new__(cls)
        graph._init(tuple(adj))
        return graph

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self._degrees

    @property
    def full(self) -> VertexSet:
        """Bitset of all vertices."""
        return (1 << len(self._adj)) - 1

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(
                "Vertex {!r} out of range for a graph of order {}".format(
                    v, self.n))
        return v

    def degree(self, v: int) -> int:
        return self._degrees[self.check_vertex(v)]

    def neighbors(self, v: int) -> VertexSet:
        return self._adj[self.check_vertex(v)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[self.check_vertex(u)] >> self.check_vertex(v) & 1)

    def edges(self) -> List[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [
            (u, v)
            for u, row in enumerate(self._adj)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    def non_edges(self) -> List[Edge]:
        full = self.full
        return [
            (u, v)
            for u, row in enumerate(self._adj)
            for v in iter_bits(~row & full >> (u + 1) << (u + 1))
        ]

    def add_edges(self, pairs: Iterable[Edge]) -> Graph:
        """Return a new graph with the given edges added."""
        adj = list(self._adj)
        for u, v in pairs:
            self.check_vertex(u)
            self.check_vertex(v)
            if u == v:
                raise GraphError("Self-loop at vertex {}".format(u))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph._from_rows(adj)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self):
        return 'Graph(n={}, edges={})'.format(self.n, self.edges())


def build_graph(n: int, edges: Iterable[Edge] = ()) -> Graph:
    """Create a graph from an edge list.

    :param n: number of vertices
    :param edges: unordered vertex pairs, duplicates are collapsed
    :raises GraphError: on self-loops, endpoints out of range or n > 64
    """
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(
            "Order must lie in 0..{}, got {}".format(MAX_ORDER, n))
    return Graph._from_rows([0] * n).add_edges(edges)


def pair_list(n: int) -> List[Edge]:
    """All vertex pairs ``(u, v)``, ``u < v``, in lexicographic order."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def from_edge_code(n: int, code: int, pairs: Optional[List[Edge]] = None
                   ) -> Graph:
    """Graph whose edges are the pairs selected by the bits of ``code``,
    indexed as in :func:`pair_list`."""
    if pairs is None:
        pairs = pair_list(n)
    adj = [0] * n
    for k in iter_bits(code):
        u, v = pairs[k]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._from_rows(adj)


def complement(graph: Graph) -> Graph:
    full = graph.full
    return Graph._from_rows(
        ~row & full & ~(1 << v) for v, row in enumerate(graph.adj))


def induced_subgraph(graph: Graph, vertices: VertexSet) -> Graph:
    """Subgraph induced by ``vertices``, relabelled in increasing order."""
    order = members(vertices & graph.full)
    index = {v: i for i, v in enumerate(order)}
    return Graph._from_rows(
        bitset(index[u] for u in iter_bits(graph.adj[v] & vertices))
        for v in order)


def disjoint_union(first: Graph, second: Graph) -> Graph:
    shift = first.n
    return Graph(list(first.adj) + [row << shift for row in second.adj])


def is_clique(adj: Sequence[int], vertices: VertexSet) -> bool:
    for v in iter_bits(vertices):
        if (vertices & ~(1 << v)) & ~adj[v]:
            return False
    return True


def components(rows, vertices: VertexSet) -> List[VertexSet]:
    """Connected components of the subgraph induced by ``vertices``.

    ``rows`` maps each member to its neighbour bitset (a tuple of rows or a
    dict); neighbours outside ``vertices`` are ignored. Components are
    ordered by their smallest member.
    """
    parts = []
    remaining = vertices
    while remaining:
        part = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= rows[v]
            frontier = reach & remaining & ~part
            part |= frontier
        parts.append(part)
        remaining &= ~part
    return parts


def connected_components(graph: Graph) -> List[VertexSet]:
    return components(graph.adj, graph.full)


def is_connected(graph: Graph) -> bool:
    return len(connected_components(graph)) <= 1


def is_nonseparable(adj: Sequence[int], vertices: VertexSet) -> bool:
    """Connected without cut vertex; ``K_1`` and ``K_2`` count as
    nonseparable."""
    if len(components(adj, vertices)) != 1:
        return False
    if popcount(vertices) <= 2:
        return True
    return all(
        len(components(adj, vertices & ~(1 << v))) == 1
        for v in iter_bits(vertices))


def is_two_connected(graph: Graph) -> bool:
    return graph.n >= 3 and is_nonseparable(graph.adj, graph.full)


def distance(graph: Graph, u: int, v: int) -> Optional[int]:
    """Length of a shortest ``u``-``v`` path, ``None`` if unreachable."""
    graph.check_vertex(u)
    graph.check_vertex(v)
    if u == v:
        return 0
    adj = graph.adj
    seen = frontier = 1 << u
    hops = 0
    while frontier:
        hops += 1
        reach = 0
        for w in iter_bits(frontier):
            reach |= adj[w]
        frontier = reach & ~seen
        if frontier >> v & 1:
            return hops
        seen |= frontier
    return None


def cliques_within(adj: Sequence[int], vertices: VertexSet) -> List[VertexSet]:
    """Maximal cliques of the subgraph induced by ``vertices``.

    Bron-Kerbosch with pivoting on bitsets. The result is sorted by the
    member lists of the cliques.
    """
    found = []

    def expand(clique, candidates, excluded):
        if not candidates and not excluded:
            found.append(clique)
            return
        pivot = max(
            iter_bits(candidates | excluded),
            key=lambda u: popcount(candidates & adj[u]))
        for v in iter_bits(candidates & ~adj[pivot]):
            bit = 1 << v
            expand(clique | bit, candidates & adj[v], excluded & adj[v])
            candidates &= ~bit
            excluded |= bit

    if vertices:
        expand(0, vertices, 0)
    return sorted(found, key=members)


def maximal_cliques(graph: Graph) -> List[VertexSet]:
    return cliques_within(graph.adj, graph.full)


# graph6

_GRAPH6_PREFIX = '>>graph6<<'


def write_graph6(graph: Graph) -> str:
    """Encode a graph in nauty's graph6 format (without header line)."""
    n = graph.n
    if n <= 62:
        head = [n]
    else:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    adj = graph.adj
    bits = [
        adj[i] >> j & 1
        for j in range(1, n)
        for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    body = [
        int(''.join(map(str, bits[k:k + 6])), 2)
        for k in range(0, len(bits), 6)
    ]
    return ''.join(chr(63 + x) for x in head + body)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string.

    :raises Graph6Error: with the offending byte offset for empty input,
        characters outside ``?..~``, orders above 64 or a body of the
        wrong length or nonzero padding bits.
    """
    text = text.strip()
    offset = 0
    if text.startswith(_GRAPH6_PREFIX):
        offset = len(_GRAPH6_PREFIX)
        text = text[offset:]
    if not text:
        raise Graph6Error("Empty graph6 string", offset)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(
                "Invalid graph6 character {!r}".format(ch), offset + i)
    data = [ord(ch) - 63 for ch in text]
    if data[0] == 63:
        if len(data) < 4:
            raise Graph6Error("Truncated graph6 order header", offset + len(data))
        if data[1] == 63:
            raise Graph6Error(
                "Orders above {} are not supported".format(MAX_ORDER),
                offset + 1)
        n = data[1] << 12 | data[2] << 6 | data[3]
        start = 4
    else:
        n = data[0]
        start = 1
    if n > MAX_ORDER:
        raise Graph6Error(
            "Orders above {} are not supported, got {}".format(MAX_ORDER, n),
            offset)
    expected = (n * (n - 1) // 2 + 5) // 6
    body = data[start:]
    if len(body) != expected:
        raise Graph6Error(
            "Expected {} body bytes for order {}, got {}".format(
                expected, n, len(body)),
            offset + start + min(len(body), expected))
    padding = expected * 6 - n * (n - 1) // 2
    if expected and body[-1] & ((1 << padding) - 1):
        raise Graph6Error("Nonzero padding bits in the last graph6 byte",
                          offset + start + expected - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph._from_rows(adj)


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def from_networkx(nxgraph: nx.Graph) -> Graph:
    """Convert a networkx graph, relabelling nodes in sorted order."""
    order = sorted(nxgraph.nodes())
    index = {v: i for i, v in enumerate(order)}
    return build_graph(
        len(order),
        ((index[u], index[v]) for u, v in nxgraph.edges() if u != v))
