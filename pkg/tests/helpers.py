"""Shared test utilities: seeded random trees and independent-set enumeration."""

import random

from sparing.graphs import Graph, graph_from_edges, is_independent


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree on n vertices from a random Pruefer sequence."""
    if n == 1:
        return graph_from_edges(1, [])
    if n == 2:
        return graph_from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    import heapq

    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    last = [v for v in range(n) if degree[v] == 1]
    assert len(last) == 2
    edges.append((last[0], last[1]))
    return graph_from_edges(n, edges)


def independent_sets(g: Graph):
    """Every independent set of g as a sorted tuple (exhaustive; small n only)."""
    for mask in range(1 << g.n):
        members = tuple(v for v in range(g.n) if mask >> v & 1)
        if is_independent(g, members):
            yield members
