"""Catalog of the closed-form sparing-number claims and the checker.

Each claim pairs a family template with the closed-form value it predicts.
`check_claim` builds the instance, asks the exact solver for the true value,
and reports MATCH or MISMATCH; predicted values come only from the formulas
here, exact values only from the solver, and a MISMATCH is a finding about
the claim, not a failure of the checker. Claims whose stated value is
contested are encoded exactly as stated so the solver can adjudicate them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Mapping

from .errors import DomainError, MissingGraph
from .families import FamilySpec, LabeledGraph, generate
from .graphs import Graph, iter_bits, subdivide_edges, shadow, triangles_through
from .labels import mono_edges, sumset, verify_weak
from .solver import solve_and_certify, sparing_exact

Params = Mapping[str, object]


@dataclass(frozen=True)
class Claim:
    id: str
    family: str
    statement: str
    param_order: tuple[str, ...]
    needs_graph: bool = False

    def check_domain(self, params: Params) -> None:
        _DOMAIN[self.id](params)

    def instance(self, params: Params) -> LabeledGraph:
        """The labeled graph whose exact sparing number the claim predicts."""
        self.check_domain(params)
        return _INSTANCE[self.id](params)


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    params: dict
    predicted: int
    exact: int
    verdict: str  # MATCH | MISMATCH
    witness_size: int
    mono_count: int
    runtime_ms: int


def _as_int(params: Params, key: str, claim: str) -> int:
    if key not in params:
        raise DomainError(f"{claim} requires parameter {key}")
    value = params[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{claim}: {key} must be an integer")
    return value


def _as_int_list(params: Params, key: str, claim: str) -> list[int]:
    if key not in params:
        raise DomainError(f"{claim} requires parameter {key}")
    value = params[key]
    if not isinstance(value, (list, tuple)) or not value:
        raise DomainError(f"{claim}: {key} must be a non-empty list")
    return list(value)


def _as_base(params: Params, claim: str) -> FamilySpec:
    base = params.get("base")
    if not isinstance(base, FamilySpec):
        raise DomainError(f"{claim} requires a 'base' FamilySpec parameter")
    return base


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def _domain_c12(p: Params) -> None:
    _as_base(p, "C12")


def _domain_c13(p: Params) -> None:
    _as_base(p, "C13")
    _require(p.get("mode") in ("fresh", "induced"), "C13 requires mode in {fresh, induced}")


# --- domains ---------------------------------------------------------------

_DOMAIN: dict[str, Callable[[Params], None]] = {
    "C1": lambda p: _require(_as_int(p, "n", "C1") >= 1, "C1 requires n >= 1"),
    "C2": lambda p: _require(
        _as_int(p, "n", "C2") >= 3 and p["n"] % 2 == 1, "C2 requires odd n >= 3"
    ),
    "C3": lambda p: _require(
        _as_int(p, "a", "C3") >= 1 and _as_int(p, "b", "C3") >= 1,
        "C3 requires a >= 1 and b >= 1",
    ),
    "C4": lambda p: _require(_as_int(p, "n", "C4") >= 3, "C4 requires n >= 3"),
    "C5": lambda p: _require(
        _as_int(p, "r", "C5") >= 1 and _as_int(p, "s", "C5") >= 1,
        "C5 requires r >= 1 and s >= 1",
    ),
    "C6": lambda p: _require(
        _as_int(p, "r", "C6") >= 1 and _as_int(p, "s", "C6") >= 1,
        "C6 requires r >= 1 and s >= 1",
    ),
    "C7": lambda p: _require(
        all(_as_int(p, k, "C7") >= 1 for k in ("x", "y", "z")),
        "C7 requires x, y, z >= 1",
    ),
    "C8": lambda p: _require(
        all(_as_int(p, k, "C8") >= 1 for k in ("a", "b", "c")),
        "C8 requires a, b, c >= 1",
    ),
    "C9": lambda p: _require(
        all(isinstance(s, int) and s >= 2 for s in _as_int_list(p, "cliques", "C9")),
        "C9 requires all clique sizes >= 2",
    ),
    "C10": lambda p: _require(
        _as_int(p, "n", "C10") >= 2 and _as_int(p, "r", "C10") >= 2,
        "C10 requires n >= 2 and r >= 2",
    ),
    "C11": lambda p: _require(_as_int(p, "r", "C11") >= 2, "C11 requires r >= 2"),
    "C12": _domain_c12,
    "C13": _domain_c13,
    "C14": lambda p: _require(
        all(isinstance(l, int) and l >= 3 for l in _as_int_list(p, "cycles", "C14")),
        "C14 requires all cycle lengths >= 3",
    ),
    "C15": lambda p: _require(_as_int(p, "m", "C15") >= 3, "C15 requires m >= 3"),
    "C16": lambda p: _require(
        _as_int(p, "m", "C16") >= 3 and _as_int(p, "n", "C16") >= 2,
        "C16 requires m >= 3 and n >= 2",
    ),
}


# --- instances -------------------------------------------------------------


def _maximal_subdivision(base: FamilySpec) -> Graph:
    """Subdivide every mono edge of the base graph's certified optimal labeling."""
    lg = generate(base)
    result, _ = solve_and_certify(lg.graph)
    return subdivide_edges(lg.graph, result.mono)


_INSTANCE: dict[str, Callable[[Params], LabeledGraph]] = {
    "C1": lambda p: generate(FamilySpec("complete", {"n": p["n"]})),
    "C2": lambda p: generate(FamilySpec("cycle", {"n": p["n"]})),
    "C3": lambda p: generate(FamilySpec("complete_bipartite", {"parts": [p["a"], p["b"]]})),
    "C4": lambda p: generate(FamilySpec("complete_sun", {"n": p["n"]})),
    "C5": lambda p: generate(FamilySpec("complete_split", {"r": p["r"], "s": p["s"]})),
    "C6": lambda p: generate(FamilySpec("complete_split", {"r": p["r"], "s": p["s"]})),
    "C7": lambda p: generate(
        FamilySpec("complete_bisplit", {"parts": [p["x"], p["y"], p["z"]]})
    ),
    "C8": lambda p: generate(
        FamilySpec("complete_multipartite", {"parts": [p["a"], p["b"], p["c"]]})
    ),
    "C9": lambda p: generate(FamilySpec("block_chain", {"cliques": list(p["cliques"])})),
    "C10": lambda p: generate(FamilySpec("windmill", {"n": p["n"], "r": p["r"]})),
    "C11": lambda p: generate(FamilySpec("friendship", {"r": p["r"]})),
    "C12": lambda p: LabeledGraph(
        shadow(generate(_as_base(p, "C12")).graph), {}, FamilySpec("shadow", dict(p))
    ),
    "C13": lambda p: LabeledGraph(
        _maximal_subdivision(_as_base(p, "C13")), {}, FamilySpec("max_subdivision", dict(p))
    ),
    "C14": lambda p: generate(FamilySpec("cactus_chain", {"cycles": list(p["cycles"])})),
    "C15": lambda p: generate(FamilySpec("wheel", {"m": p["m"]})),
    "C16": lambda p: generate(FamilySpec("cone", {"m": p["m"], "n": p["n"]})),
}


# --- predicted values ------------------------------------------------------


def _min_clique_triangles(lg: LabeledGraph) -> int:
    clique = lg.partitions.get("clique")
    if clique is None:
        raise MissingGraph("C5 needs an instance with a 'clique' partition")
    return min(triangles_through(lg.graph, u) for u in sorted(clique))


def _cross_paths_through_least_part(lg: LabeledGraph) -> int:
    # paths u-v-w with v in the least-cardinality part and u, w in the two
    # different remaining parts; ties between parts resolve in X, Y, Z order
    try:
        named = [(name, lg.partitions[name]) for name in ("X", "Y", "Z")]
    except KeyError:
        raise MissingGraph("C7 needs an instance with X, Y, Z partitions") from None
    named.sort(key=lambda item: (len(item[1]), ("X", "Y", "Z").index(item[0])))
    (_, least), (_, part_a), (_, part_b) = named
    g = lg.graph
    mask_a = sum(1 << v for v in part_a)
    mask_b = sum(1 << v for v in part_b)
    return sum(
        (g.adjacency_mask(v) & mask_a).bit_count()
        * (g.adjacency_mask(v) & mask_b).bit_count()
        for v in sorted(least)
    )


def _blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (standard low-link edge stack)."""
    disc = [0] * g.n
    low = [0] * g.n
    counter = [1]
    stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []

    def dfs(u: int, parent: int) -> None:
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        for v in iter_bits(g.adjacency_mask(u)):
            if disc[v] == 0:
                stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)
            elif v != parent and disc[v] < disc[u]:
                stack.append((u, v))
                low[u] = min(low[u], disc[v])

    for root in range(g.n):
        if disc[root] == 0:
            dfs(root, -1)
    return blocks


def odd_cycle_block_count(g: Graph) -> int:
    """Number of blocks that are odd cycles (every cactus block is a cycle or an edge)."""
    count = 0
    for block in _blocks(g):
        vertices = {v for e in block for v in e}
        if len(block) == len(vertices) and len(block) % 2 == 1:
            count += 1
    return count


def _phi_of_base(params: Params, claim: str) -> int:
    return sparing_exact(generate(_as_base(params, claim)).graph).value


_PREDICTED: dict[str, Callable[[Params, LabeledGraph | None], int]] = {
    "C1": lambda p, lg: (p["n"] - 1) * (p["n"] - 2) // 2,
    "C2": lambda p, lg: 1,
    "C3": lambda p, lg: 0,
    "C4": lambda p, lg: (p["n"] ** 2 - 3 * p["n"] + 6) // 2,
    "C5": lambda p, lg: _min_clique_triangles(_need_graph(lg, "C5")),
    "C6": lambda p, lg: p["r"] * (p["r"] - 1) // 2,
    "C7": lambda p, lg: _cross_paths_through_least_part(_need_graph(lg, "C7")),
    "C8": lambda p, lg: _product_of_two_smallest(p["a"], p["b"], p["c"]),
    "C9": lambda p, lg: sum((s - 1) * (s - 2) // 2 for s in p["cliques"]),
    "C10": lambda p, lg: p["r"] * (p["n"] - 1) * (p["n"] - 2) // 2,
    "C11": lambda p, lg: p["r"],
    "C12": lambda p, lg: 2 * _phi_of_base(p, "C12"),
    "C13": lambda p, lg: 2 * _phi_of_base(p, "C13"),
    "C14": lambda p, lg: odd_cycle_block_count(_need_graph(lg, "C14").graph),
    "C15": lambda p, lg: p["m"] // 2,  # == ceil((m - 1) / 2)
    "C16": lambda p, lg: p["m"],
}


def _need_graph(lg: LabeledGraph | None, claim: str) -> LabeledGraph:
    if lg is None:
        raise MissingGraph(f"{claim} is graph-dependent; pass its instance")
    return lg


def _product_of_two_smallest(a: int, b: int, c: int) -> int:
    lo, mid, _ = sorted((a, b, c))
    return lo * mid


_CATALOG: tuple[Claim, ...] = (
    Claim("C1", "complete", "phi(K_n) = (n-1)(n-2)/2", ("n",)),
    Claim("C2", "cycle", "phi(C_n) = 1 for odd n", ("n",)),
    Claim("C3", "complete_bipartite", "phi(K_{a,b}) = 0", ("a", "b")),
    Claim("C4", "complete_sun", "phi(sun_n) = (n^2 - 3n + 6)/2", ("n",)),
    Claim(
        "C5",
        "complete_split",
        "phi(split) = fewest triangles through any one clique vertex",
        ("r", "s"),
        needs_graph=True,
    ),
    Claim("C6", "complete_split", "phi(K_S(r,s)) = r(r-1)/2", ("r", "s")),
    Claim(
        "C7",
        "complete_bisplit",
        "phi(bisplit) = cross paths of length 2 through the least part",
        ("x", "y", "z"),
        needs_graph=True,
    ),
    Claim(
        "C8",
        "complete_multipartite",
        "phi(K_{a,b,c}) = product of the two smallest part sizes",
        ("a", "b", "c"),
    ),
    Claim("C9", "block_chain", "phi(block graph) = sum (n_i-1)(n_i-2)/2", ("cliques",)),
    Claim("C10", "windmill", "phi(W(n,r)) = r(n-1)(n-2)/2", ("n", "r")),
    Claim("C11", "friendship", "phi(F_r) = r", ("r",)),
    Claim("C12", "shadow", "phi(shadow(G)) = 2 phi(G)", ("base",)),
    Claim(
        "C13",
        "max_subdivision",
        "phi(maximal subdivision of G) = 2 phi(G)",
        ("base", "mode"),
    ),
    Claim("C14", "cactus_chain", "phi(cactus) = number of odd cycles", ("cycles",), needs_graph=True),
    Claim("C15", "wheel", "phi(wheel on m+1 vertices) = ceil((m-1)/2)", ("m",)),
    Claim("C16", "cone", "phi(cone(m,n)) = m for n >= 2", ("m", "n")),
)


def catalog() -> list[Claim]:
    """All 16 cataloged claims in id order."""
    return list(_CATALOG)


def claim_by_id(claim_id: str) -> Claim:
    for claim in _CATALOG:
        if claim.id == claim_id:
            return claim
    raise KeyError(claim_id)


def predicted_value(claim: Claim, params: Params, lg: LabeledGraph | None = None) -> int:
    """The claimed closed-form value at ``params`` (graph-dependent claims need ``lg``)."""
    claim.check_domain(params)
    return _PREDICTED[claim.id](params, lg)


def _exact_induced_subdivision(base: FamilySpec) -> tuple[int, int, int]:
    """Mono count of the labeling a maximal subdivision inherits from its base.

    Each subdivided edge's fresh vertex takes over the edge's old sum set, so
    both replacement edges come out mono.
    """
    lg = generate(base)
    result, labeling = solve_and_certify(lg.graph)
    subdivided = subdivide_edges(lg.graph, result.mono)
    extended = dict(labeling)
    for offset, (u, v) in enumerate(result.mono):
        extended[lg.graph.n + offset] = sumset(labeling[u], labeling[v])
    verdict = verify_weak(subdivided, extended)
    if not verdict.ok:
        raise AssertionError("inherited subdivision labeling failed verification")
    mono = mono_edges(subdivided, extended)
    non_singleton = sum(1 for lab in extended.values() if len(lab) > 1)
    return len(mono), non_singleton, len(mono)


def check_claim(
    claim: Claim,
    params: Params,
    lg: LabeledGraph | None = None,
    threads: int | None = None,
) -> ClaimVerdict:
    """Compare the claim's predicted value against the exact solver on one instance."""
    claim.check_domain(params)
    if lg is None:
        lg = claim.instance(params)
    t0 = time.perf_counter()
    if claim.id == "C13" and params.get("mode") == "induced":
        exact, witness_size, mono_count = _exact_induced_subdivision(_as_base(params, "C13"))
    else:
        result = sparing_exact(lg.graph, threads=threads)
        exact, witness_size, mono_count = result.value, len(result.witness), len(result.mono)
    runtime_ms = int((time.perf_counter() - t0) * 1000)
    predicted = predicted_value(claim, params, lg if claim.needs_graph else None)
    verdict = "MATCH" if predicted == exact else "MISMATCH"
    return ClaimVerdict(
        claim_id=claim.id,
        params=dict(params),
        predicted=predicted,
        exact=exact,
        verdict=verdict,
        witness_size=witness_size,
        mono_count=mono_count,
        runtime_ms=runtime_ms,
    )
