"""Exact sparing-number computation.

A weak labeling forces a singleton on at least one endpoint of every edge, so
the non-singleton vertices always form an independent set I, and the
singleton-labeled ("mono") edges are exactly the edges with both endpoints
outside I. Conversely, `construct_witness` realizes any independent set I as
a valid weak labeling whose mono edges are exactly the edges outside I. The
sparing number is therefore

    min over independent sets I of |edges inside V minus I|

and, because every edge has at most one endpoint in an independent set, the
count inside the complement equals |E| minus the total degree of I. The
branch-and-bound search maximizes that covered degree sum; the brute-force
oracle scores complements by counting their edges directly, so the two
routes stay independent.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import CertificationFailed, NotIndependent, TooLarge
from .graphs import (
    Edge,
    Graph,
    count_edges_within_mask,
    edges_within,
    is_independent,
    iter_bits,
    mask_of,
)
from .labels import Labeling, mono_edges, verify_weak

BRUTEFORCE_MAX_VERTICES = 24
WITNESS_MAX_VERTICES = 30  # exclusive bound: 2 * 4**29 < 2**63


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    elapsed_s: float


@dataclass(frozen=True)
class SparingResult:
    """Optimal sparing value with its canonical certificate.

    ``witness`` is the lexicographically least (as a sorted index sequence)
    independent set among all optimal ones; ``mono`` is the canonical list of
    edges with both endpoints outside the witness, and len(mono) == value.
    """

    value: int
    witness: tuple[int, ...]
    mono: tuple[Edge, ...]
    stats: SearchStats


def _finish(g: Graph, witness_mask: int, nodes: int, t0: float) -> SparingResult:
    witness = tuple(iter_bits(witness_mask))
    complement = [v for v in range(g.n) if not witness_mask >> v & 1]
    mono = tuple(edges_within(g, complement))
    stats = SearchStats(nodes=nodes, elapsed_s=time.perf_counter() - t0)
    return SparingResult(len(mono), witness, mono, stats)


def sparing_bruteforce(g: Graph) -> SparingResult:
    """Reference oracle: minimum over ALL independent sets by exhaustive enumeration.

    Every independent subset is visited and scored by counting the edges
    inside its complement; ties fall to the lexicographically least sorted
    index sequence. Capped at 24 vertices.
    """
    if g.n > BRUTEFORCE_MAX_VERTICES:
        raise TooLarge(f"brute force is capped at {BRUTEFORCE_MAX_VERTICES} vertices")
    t0 = time.perf_counter()
    n = g.n
    adj = [g.adjacency_mask(v) for v in range(n)]
    full = (1 << n) - 1
    best_val = count_edges_within_mask(g, full)  # I = empty set
    best_mask = 0
    nodes = 0

    def visit(v: int, mask: int) -> None:
        nonlocal nodes, best_val, best_mask
        nodes += 1
        if v == n:
            if mask == 0:
                return  # scored as the initial incumbent
            val = count_edges_within_mask(g, full ^ mask)
            if val < best_val or (
                val == best_val and tuple(iter_bits(mask)) < tuple(iter_bits(best_mask))
            ):
                best_val, best_mask = val, mask
            return
        visit(v + 1, mask)
        if not adj[v] & mask:
            visit(v + 1, mask | (1 << v))

    visit(0, 0)
    return _finish(g, best_mask, nodes, t0)


def sparing_exact(g: Graph, threads: int | None = None) -> SparingResult:
    """Exact solve by branch and bound over independent sets.

    Returns the same value/witness/mono as `sparing_bruteforce` on every
    input where both run. Branching follows descending original degree (ties
    to the lower index); a free vertex whose neighbors are all decided-out is
    taken unconditionally, since enlarging an independent set never adds mono
    edges. The bound is the covered degree sum: a branch dies when even
    claiming every remaining free vertex cannot beat the incumbent.

    ``threads`` is validated for interface compatibility; branch evaluation
    is sequential, which makes the result trivially identical at any thread
    count.
    """
    if threads is not None and (not isinstance(threads, int) or threads < 1):
        raise ValueError("threads must be a positive integer")
    t0 = time.perf_counter()
    n = g.n
    adj = [g.adjacency_mask(v) for v in range(n)]
    deg = [m.bit_count() for m in adj]
    total_edges = sum(deg) // 2
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    full = (1 << n) - 1
    nodes = 0

    # greedy incumbent for the covered degree sum
    best_cov = 0
    free = full
    for v in order:
        if free >> v & 1:
            best_cov += deg[v]
            free &= ~(adj[v] | 1 << v)

    def explore(i: int, free: int, cov: int, rem: int) -> None:
        nonlocal nodes, best_cov
        nodes += 1
        scan = free
        while scan:
            low = scan & -scan
            scan ^= low
            v = low.bit_length() - 1
            if not adj[v] & free:
                # no free neighbor: taking v is always at least as good
                free ^= low
                cov += deg[v]
                rem -= deg[v]
        if not free:
            if cov > best_cov:
                best_cov = cov
            return
        if cov + rem <= best_cov:
            return
        while not free >> order[i] & 1:
            i += 1
        v = order[i]
        vbit = 1 << v
        dropped = adj[v] & free
        lost = deg[v]
        scan = dropped
        while scan:
            low = scan & -scan
            scan ^= low
            lost += deg[low.bit_length() - 1]
        explore(i + 1, free & ~(dropped | vbit), cov + deg[v], rem - lost)
        explore(i + 1, free & ~vbit, cov, rem - deg[v])

    explore(0, full, 0, sum(deg))
    target = best_cov

    def reachable(free: int, cov: int) -> bool:
        """Can an independent subset of ``free`` lift the covered sum to target?"""
        nonlocal nodes
        nodes += 1
        scan = free
        while scan:
            low = scan & -scan
            scan ^= low
            v = low.bit_length() - 1
            if not adj[v] & free:
                free ^= low
                cov += deg[v]
        if cov == target:
            return True
        if not free:
            return False
        rem = 0
        scan = free
        while scan:
            low = scan & -scan
            scan ^= low
            rem += deg[low.bit_length() - 1]
        if cov + rem < target:
            return False
        i = 0
        while not free >> order[i] & 1:
            i += 1
        v = order[i]
        vbit = 1 << v
        if reachable(free & ~(adj[v] | vbit), cov + deg[v]):
            return True
        return reachable(free & ~vbit, cov)

    # lexicographically least optimal witness, built prefix by prefix: stop as
    # soon as the prefix itself is optimal (a prefix precedes every extension)
    chosen: list[int] = []
    c_mask = 0
    blocked = 0
    cov_c = 0
    while cov_c != target:
        start = chosen[-1] + 1 if chosen else 0
        for j in range(start, n):
            jbit = 1 << j
            if blocked & jbit:
                continue
            above = full & ~((jbit << 1) - 1)
            if reachable(above & ~(blocked | adj[j]), cov_c + deg[j]):
                chosen.append(j)
                c_mask |= jbit
                blocked |= adj[j] | jbit
                cov_c += deg[j]
                break
        else:
            raise AssertionError("optimal witness reconstruction exhausted all prefixes")

    return _finish(g, c_mask, nodes, t0)


def construct_witness(g: Graph, independent: tuple[int, ...] | frozenset[int]) -> Labeling:
    """A weak labeling whose non-singleton vertices are exactly ``independent``.

    Vertex i receives {4**i}, or {4**i, 2*4**i} inside the independent set.
    Every element encodes its vertex (or edge) in base-4 digits without
    carries, so vertex labels and edge sum sets are automatically pairwise
    distinct, and the mono edges are exactly the edges avoiding the set.
    """
    if g.n >= WITNESS_MAX_VERTICES:
        raise TooLarge(
            f"witness labels need {WITNESS_MAX_VERTICES - 1} or fewer vertices to fit 64 bits"
        )
    independent = tuple(independent)
    if any(not 0 <= v < g.n for v in independent):
        raise NotIndependent(f"vertex set {sorted(independent)} is not valid for this graph")
    if not is_independent(g, independent):
        raise NotIndependent(f"vertex set {sorted(independent)} spans an edge")
    chosen = mask_of(independent)
    f: Labeling = {}
    for v in range(g.n):
        base = 4**v
        f[v] = (base, 2 * base) if chosen >> v & 1 else (base,)
    return f


def solve_and_certify(g: Graph, threads: int | None = None) -> tuple[SparingResult, Labeling]:
    """Solve exactly, then prove the value with an explicit verified labeling."""
    if g.n >= WITNESS_MAX_VERTICES:
        raise TooLarge(
            f"certification needs {WITNESS_MAX_VERTICES - 1} or fewer vertices"
        )
    result = sparing_exact(g, threads=threads)
    labeling = construct_witness(g, result.witness)
    verdict = verify_weak(g, labeling)
    mono = tuple(mono_edges(g, labeling))
    if not verdict.ok or mono != result.mono or len(mono) != result.value:
        raise CertificationFailed(
            f"witness labeling disagrees with the solve (value {result.value}, "
            f"labeled mono count {len(mono)})"
        )
    return result, labeling
