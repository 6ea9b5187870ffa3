"""Immutable simple graphs over dense 0-based vertex indices.

Adjacency is stored as one Python-int bitset per vertex, which keeps the
structural operations (independence tests, induced edge counts, shadows,
subdivisions) branch-free and cheap to share across solver branches.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import EdgeNotFound, GraphFormatError, IndexOutOfRange, SelfLoop

Edge = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite simple undirected loopless graph, immutable after construction."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # internal: callers go through graph_from_edges / the derived operations
        self.n = n
        self._adj = adj

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def adjacency_mask(self, v: int) -> int:
        """Bitset of the neighbors of ``v``."""
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adjacency_mask(v))

    def degree(self, v: int) -> int:
        return self.adjacency_mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges in canonical (min, max) lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in iter_bits(rest))
        return out

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def graph_from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph on vertices 0..n-1 from an (unordered, possibly repeated) edge list."""
    if n < 0:
        raise IndexOutOfRange(f"vertex count {n} is negative")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"edge ({u},{v}) is a loop")
        for w in (u, v):
            if not 0 <= w < n:
                raise IndexOutOfRange(f"vertex {w} not in 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def validate(g: Graph) -> None:
    """Assert adjacency symmetry and looplessness (used by the test suite)."""
    for v in range(g.n):
        mask = g._adj[v]
        if mask >> v & 1:
            raise SelfLoop(f"vertex {v} is adjacent to itself")
        if mask >> g.n:
            raise IndexOutOfRange(f"adjacency of {v} mentions vertices >= {g.n}")
        for u in iter_bits(mask):
            if not g._adj[u] >> v & 1:
                raise GraphFormatError(f"edge ({v},{u}) is not symmetric")


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``vertices``."""
    m = 0
    for v in vertices:
        g._check_vertex(v)
        m |= 1 << v
    return all(not (g._adj[v] & m) for v in iter_bits(m))


def edges_within(g: Graph, vertices: Iterable[int]) -> list[Edge]:
    """Edges with both endpoints in ``vertices``, canonically ordered."""
    m = 0
    for v in vertices:
        g._check_vertex(v)
        m |= 1 << v
    out = []
    for u in iter_bits(m):
        inside = g._adj[u] & m
        inside = inside >> (u + 1) << (u + 1)
        out.extend((u, v) for v in iter_bits(inside))
    return out


def count_edges_within_mask(g: Graph, m: int) -> int:
    """Fast edge count inside the vertex bitset ``m`` (solver hot path)."""
    total = 0
    for u in iter_bits(m):
        total += (g._adj[u] & m).bit_count()
    return total // 2


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 with G2's vertices appended (shifted by |V(G1)|) and edge sets concatenated."""
    shift = g1.n
    adj = list(g1._adj) + [m << shift for m in g2._adj]
    return Graph(g1.n + g2.n, tuple(adj))


def shadow(g: Graph) -> Graph:
    """Add a twin n+i for each vertex i, joined to i's neighbors (not to i itself)."""
    n = g.n
    adj = [0] * (2 * n)
    for v in range(n):
        adj[v] = g._adj[v]
    for v in range(n):
        for u in iter_bits(g._adj[v]):
            adj[n + v] |= 1 << u
            adj[u] |= 1 << (n + v)
    return Graph(2 * n, tuple(adj))


def subdivide_edges(g: Graph, targets: Iterable[Edge]) -> Graph:
    """Replace each edge in ``targets`` by a length-2 path through a fresh vertex.

    Fresh vertices are numbered in ``targets`` order starting at |V(G)|.
    """
    targets = list(targets)
    seen: set[Edge] = set()
    for u, v in targets:
        e = _canon(u, v)
        if not g.has_edge(u, v):
            raise EdgeNotFound(f"({u},{v}) is not an edge")
        if e in seen:
            raise EdgeNotFound(f"({u},{v}) listed twice")
        seen.add(e)
    n = g.n
    adj = list(g._adj) + [0] * len(targets)
    for i, (u, v) in enumerate(targets):
        w = n + i
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        adj[u] |= 1 << w
        adj[v] |= 1 << w
        adj[w] = (1 << u) | (1 << v)
    return Graph(n + len(targets), tuple(adj))


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-coloring as (side0, side1), or None.

    Deterministic: BFS from the lowest-index vertex of each component, which
    is colored side 0.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for v in queue:
                for u in iter_bits(g._adj[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return None
            queue = nxt
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def triangles_through(g: Graph, v: int) -> int:
    """Number of triangles containing ``v`` = edges between v's neighbors."""
    nbrs = g.adjacency_mask(v)
    return count_edges_within_mask(g, nbrs)


# Text graph format: optional '#' comment lines, then 'p <n> <m>', then m
# lines 'e <u> <v>' with 0-based endpoints, u < v, sorted lexicographically.


def write_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    n = m = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if n is not None:
                raise GraphFormatError(f"line {lineno}: comment after header")
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header") from None
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer endpoint") from None
            if u >= v:
                raise GraphFormatError(f"line {lineno}: endpoints must satisfy u < v")
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None or m is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate edge")
    try:
        return graph_from_edges(n, edges)
    except (IndexOutOfRange, SelfLoop) as exc:
        raise GraphFormatError(str(exc)) from None
