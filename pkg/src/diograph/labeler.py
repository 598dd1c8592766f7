"""Exact search for gamma-labelings (Diophantine labelings in particular).

A graph has a labeling under a rule iff it embeds, vertex-bijectively, as
a spanning subgraph of the rule's maximal graph.  :func:`find_labeling`
searches for such an embedding by backtracking with bitset domains.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

from .graphcore import Graph, LabeledGraph, _bits
from .maximal import LabelRule, build_maximal_gamma

LABELED, NONE, UNKNOWN = "labeled", "none", "unknown"
DEFAULT_BUDGET = 10**6


@dataclass
class LabelingOutcome:
    verdict: str
    labeling: dict[int, Hashable] | None = None
    nodes_expanded: int = 0
    max_depth: int = 0

    def certificate(self) -> list[list]:
        """``[[vertex, label], ...]`` sorted by vertex (empty without a labeling)."""
        if self.labeling is None:
            return []
        return [[v, self.labeling[v]] for v in sorted(self.labeling)]

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "labeling": self.certificate() if self.labeling is not None else None,
            "nodes_expanded": self.nodes_expanded,
            "max_depth": self.max_depth,
        }


def _as_label_map(g: Graph, f: Mapping[int, Hashable] | Sequence[Hashable]) -> dict[int, Hashable]:
    if isinstance(f, Mapping):
        labels = dict(f)
    else:
        if len(f) != g.n:
            raise ValueError(f"expected {g.n} labels, got {len(f)}")
        labels = {v: f[v - 1] for v in g.vertices}
    if sorted(labels) != list(g.vertices):
        raise ValueError("labeling must assign exactly one label to each vertex 1..n")
    return labels


def verify_labeling(g: Graph, f: Mapping[int, Hashable] | Sequence[Hashable], rule: LabelRule) -> bool:
    """True iff ``f`` is a bijection onto the rule's universe and every edge is compatible."""
    labels = _as_label_map(g, f)
    values = list(labels.values())
    if len(set(values)) != len(values) or set(values) != set(rule.universe) or len(values) != len(rule.universe):
        raise ValueError("labeling is not a bijection onto the rule's label universe")
    return all(rule.compatible(labels[u], labels[v]) for u, v in g.edges())


def relabel(g: Graph, f: Mapping[int, Hashable], rule: LabelRule) -> Graph:
    """``g`` transported onto the maximal graph's vertex ids (label position + 1)."""
    position = {lab: i + 1 for i, lab in enumerate(rule.universe)}
    return g.permuted({v: position[f[v]] for v in g.vertices})


def _symmetry_classes(rows: Sequence[int]) -> list[int]:
    """Class id per label; swapping two labels of one class is an automorphism.

    True twins (equal closed neighbourhoods) are grouped first, then false
    twins (equal open neighbourhoods) among the remaining singletons.
    """
    k = len(rows)
    cls = list(range(k))
    closed: dict[int, int] = {}
    for i, row in enumerate(rows):
        cls[i] = closed.setdefault(row | (1 << i), i)
    sizes: dict[int, int] = {}
    for c in cls:
        sizes[c] = sizes.get(c, 0) + 1
    opened: dict[int, int] = {}
    for i, row in enumerate(rows):
        if sizes[cls[i]] == 1:
            cls[i] = opened.setdefault(row, i)
    return cls


def find_labeling(
    g: Graph,
    rule: LabelRule,
    budget: int | None = DEFAULT_BUDGET,
    maximal: LabeledGraph | None = None,
    time_limit: float | None = None,
) -> LabelingOutcome:
    """Search for a labeling of ``g`` under ``rule``.

    Vertices are labeled in descending degree order (ties by smaller id).
    A label is a candidate for a vertex only if its degree in the maximal
    graph is at least the vertex's degree, it is unused, and it is
    compatible with every already-labeled neighbour.  Interchangeable
    labels are tried once.  ``budget`` bounds the number of label
    assignments; exhausting it yields verdict ``unknown``.  ``time_limit``
    (seconds) is an optional wall-clock guard with the same effect.
    """
    k = len(rule.universe)
    if g.n != k:
        raise ValueError(f"graph order {g.n} differs from label universe size {k}")
    if k == 0:
        return LabelingOutcome(LABELED, {}, 0, 0)
    gamma = maximal if maximal is not None else build_maximal_gamma(rule)
    lrows = gamma.graph.rows
    ldeg = [r.bit_count() for r in lrows]
    cls = _symmetry_classes(lrows)
    members: dict[int, list[int]] = {}
    for lab, c in enumerate(cls):
        members.setdefault(c, []).append(lab)

    order = sorted(range(g.n), key=lambda v: (-g.rows[v].bit_count(), v))
    gdeg = [r.bit_count() for r in g.rows]
    full = (1 << k) - 1
    domains = [sum(1 << lab for lab in range(k) if ldeg[lab] >= gdeg[v]) for v in range(g.n)]
    if any(d == 0 for d in domains):
        return LabelingOutcome(NONE, None, 0, 0)

    assigned = [-1] * g.n
    deadline = None if time_limit is None else time.monotonic() + time_limit
    nodes = 0
    max_depth = 0

    class _OutOfBudget(Exception):
        pass

    def canonical(cand: int, used: int) -> int:
        # Keep only the smallest unused label of each symmetry class.
        out = 0
        seen = set()
        for lab in _bits(cand):
            c = cls[lab]
            if c in seen:
                continue
            seen.add(c)
            if len(members[c]) > 1:
                first = next(m for m in members[c] if not used >> m & 1)
                if first != lab:
                    continue
            out |= 1 << lab
        return out

    def search(depth: int, used: int, doms: list[int]) -> bool:
        nonlocal nodes, max_depth
        if depth == g.n:
            return True
        v = order[depth]
        for lab in _bits(canonical(doms[v] & ~used, used)):
            nodes += 1
            if budget is not None and nodes > budget:
                raise _OutOfBudget
            if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
                raise _OutOfBudget
            assigned[v] = lab
            max_depth = max(max_depth, depth + 1)
            new_used = used | (1 << lab)
            new_doms = doms[:]
            ok = True
            nbrs = g.rows[v]
            remaining = 0
            for w in order[depth + 1 :]:
                d = new_doms[w] & ~new_used
                if nbrs >> w & 1:
                    d &= lrows[lab]
                if not d:
                    ok = False
                    break
                new_doms[w] = d
                remaining |= d
            # Unlabeled vertices need at least as many distinct labels between them.
            if ok and remaining.bit_count() >= g.n - depth - 1:
                if search(depth + 1, new_used, new_doms):
                    return True
            assigned[v] = -1
        return False

    try:
        found = search(0, 0, [d & full for d in domains])
    except _OutOfBudget:
        return LabelingOutcome(UNKNOWN, None, nodes, max_depth)
    if not found:
        return LabelingOutcome(NONE, None, nodes, max_depth)
    labeling = {v + 1: rule.universe[assigned[v]] for v in range(g.n)}
    assert verify_labeling(g, labeling, rule)
    return LabelingOutcome(LABELED, labeling, nodes, max_depth)


def is_labeling_isomorphic(a: LabeledGraph, b: LabeledGraph) -> bool:
    """Whether the label-preserving vertex map ``b.labels^-1 o a.labels`` is a graph isomorphism."""
    if a.universe != b.universe:
        raise ValueError("labelings are onto different label universes")
    phi = {v: b.vertex_of(a.label(v)) for v in a.graph.vertices}
    return all(
        a.graph.has_edge(u, v) == b.graph.has_edge(phi[u], phi[v])
        for u in a.graph.vertices
        for v in range(u + 1, a.graph.n + 1)
    )


def load_certificate(text: str) -> dict[int, int]:
    data = json.loads(text)
    if isinstance(data, dict) and "labeling" in data:
        data = data["labeling"]
    if not isinstance(data, list) or not all(isinstance(p, list) and len(p) == 2 for p in data):
        raise ValueError("certificate must be a list of [vertex, label] pairs")
    out = {}
    for v, lab in data:
        if v in out:
            raise ValueError(f"vertex {v} labeled twice")
        out[v] = lab
    return out
