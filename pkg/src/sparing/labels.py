"""Sum-set arithmetic and verification of set-indexer conditions.

A vertex label is a non-empty strictly increasing tuple of non-negative
integers; a labeling maps every vertex index to one. The induced edge label
is the sum set of its endpoint labels. A labeling is *weak* when, on top of
vertex- and edge-label injectivity, every edge's sum set is exactly as large
as its larger endpoint label — which forces a singleton on one endpoint of
every edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import GraphFormatError, MissingLabel
from .graphs import Edge, Graph

Label = tuple[int, ...]
Labeling = dict[int, Label]

# Labels must stay within unsigned 64-bit values; the base-4 witness scheme
# guarantees this for graphs with fewer than 30 vertices (2 * 4**29 < 2**63).
MAX_LABEL_VALUE = 2**64 - 1


def make_label(values: Iterable[int]) -> Label:
    """Normalize ``values`` into a label; rejects empty, negative, or oversized sets."""
    elems = tuple(sorted(set(values)))
    if not elems:
        raise ValueError("label sets must be non-empty")
    if elems[0] < 0:
        raise ValueError("label sets are drawn from the non-negative integers")
    if elems[-1] > MAX_LABEL_VALUE:
        raise ValueError("label element exceeds 64-bit range")
    return elems


def sumset(a: Label, b: Label) -> Label:
    """All pairwise sums of ``a`` and ``b``, de-duplicated and sorted."""
    return tuple(sorted({x + y for x in a for y in b}))


class FailureKind(Enum):
    VERTEX_COLLISION = "VertexCollision"
    EDGE_COLLISION = "EdgeCollision"
    WEAK_CONDITION_VIOLATED = "WeakConditionViolated"


@dataclass(frozen=True)
class Failure:
    kind: FailureKind
    # colliding vertex pair, colliding edge pair, or the single violating edge
    where: tuple


@dataclass(frozen=True)
class Verdict:
    ok: bool
    failures: tuple[Failure, ...] = field(default=())

    def __post_init__(self):
        assert self.ok == (not self.failures)


def _require_total(g: Graph, f: Mapping[int, Label]) -> None:
    missing = [v for v in range(g.n) if v not in f]
    if missing:
        raise MissingLabel(f"no label for vertices {missing}")


def induced_edge_labels(g: Graph, f: Mapping[int, Label]) -> dict[Edge, Label]:
    """The sum set of the endpoint labels for each edge, keyed by canonical edge."""
    _require_total(g, f)
    return {(u, v): sumset(f[u], f[v]) for u, v in g.edges()}


def verify_iasi(g: Graph, f: Mapping[int, Label]) -> Verdict:
    """Check vertex labels pairwise distinct and induced edge labels pairwise distinct.

    Every colliding pair is enumerated, not just the first.
    """
    _require_total(g, f)
    failures: list[Failure] = []
    by_label: dict[Label, list[int]] = {}
    for v in range(g.n):
        by_label.setdefault(f[v], []).append(v)
    for group in by_label.values():
        for i, u in enumerate(group):
            for v in group[i + 1:]:
                failures.append(Failure(FailureKind.VERTEX_COLLISION, (u, v)))
    edge_groups: dict[Label, list[Edge]] = {}
    for e, lab in induced_edge_labels(g, f).items():
        edge_groups.setdefault(lab, []).append(e)
    for edges in edge_groups.values():
        for i, e1 in enumerate(edges):
            for e2 in edges[i + 1:]:
                failures.append(Failure(FailureKind.EDGE_COLLISION, (e1, e2)))
    return Verdict(not failures, tuple(failures))


def verify_weak(g: Graph, f: Mapping[int, Label]) -> Verdict:
    """verify_iasi plus the per-edge cardinality condition |f(u)+f(v)| = max(|f(u)|,|f(v)|)."""
    base = verify_iasi(g, f)
    failures = list(base.failures)
    for u, v in g.edges():
        if len(sumset(f[u], f[v])) != max(len(f[u]), len(f[v])):
            failures.append(Failure(FailureKind.WEAK_CONDITION_VIOLATED, ((u, v),)))
    return Verdict(not failures, tuple(failures))


def mono_edges(g: Graph, f: Mapping[int, Label]) -> list[Edge]:
    """Edges whose induced label is a singleton, canonically ordered."""
    _require_total(g, f)
    return [e for e, lab in induced_edge_labels(g, f).items() if len(lab) == 1]


# Labeling file format: a single JSON document
# {"vertices": n, "labels": {"<index>": [sorted ints], ...}} with every index
# 0..n-1 present. The writer is canonical (fixed key order, fixed whitespace).


def write_labeling(n: int, f: Mapping[int, Label]) -> str:
    if set(f) != set(range(n)):
        raise MissingLabel(f"labeling keys must be exactly 0..{n - 1}")
    lines = ["{", f'  "vertices": {n},', '  "labels": {']
    for v in range(n):
        comma = "," if v < n - 1 else ""
        lines.append(f'    "{v}": [{", ".join(map(str, f[v]))}]{comma}')
    lines.extend(["  }", "}"])
    return "\n".join(lines) + "\n"


def read_labeling(text: str) -> tuple[int, Labeling]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"labeling is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"vertices", "labels"}:
        raise GraphFormatError("labeling must have exactly the keys 'vertices' and 'labels'")
    n = doc["vertices"]
    labels = doc["labels"]
    if not isinstance(n, int) or n < 0 or not isinstance(labels, dict):
        raise GraphFormatError("malformed labeling document")
    if set(labels) != {str(v) for v in range(n)}:
        raise GraphFormatError(f"labels must cover exactly the indices 0..{n - 1}")
    out: Labeling = {}
    for key, values in labels.items():
        if not isinstance(values, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in values
        ):
            raise GraphFormatError(f"label of vertex {key} is not a list of integers")
        if values != sorted(set(values)):
            raise GraphFormatError(f"label of vertex {key} is not strictly increasing")
        try:
            out[int(key)] = make_label(values)
        except ValueError as exc:
            raise GraphFormatError(f"label of vertex {key}: {exc}") from None
    return n, out
