"""Necessary conditions C1-C6 and the independence-number sufficient condition.

A Diophantine graph of order ``n`` is (up to relabeling) a spanning
subgraph of ``D_n``, so it can have no more edges, full-degree vertices,
clique size or minimum degree than ``D_n``, no smaller independence
number, and its cumulative degree counts must dominate those of ``D_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SearchBudgetExceeded
from .graphcore import (
    Graph,
    clique_number_exact,
    degree_sequence,
    full_degree_count,
    independence_number_exact,
    min_degree,
)
from .maximal import DnProfile, profile

PASS, FAIL, UNKNOWN = "pass", "fail", "unknown"
NOT_DIOPHANTINE = "not-diophantine"
POSSIBLY_DIOPHANTINE = "possibly-diophantine"
DIOPHANTINE_BY_SUFFICIENCY = "diophantine (by sufficiency)"

CONDITION_NAMES = ("C1", "C2", "C3", "C4", "C5", "C6")
EVALUATION_ORDER = ("C1", "C5", "C2", "C6", "C4", "C3")
DEFAULT_BUDGET = 10**6


@dataclass
class ConditionResult:
    name: str
    relation: str
    verdict: str
    graph_value: object = None
    dn_value: object = None
    violating_k: int | None = None

    def as_dict(self) -> dict:
        d = {
            "verdict": self.verdict,
            "relation": self.relation,
            "graph": self.graph_value,
            "D_n": self.dn_value,
        }
        if self.name == "C6":
            d["violating_k"] = self.violating_k
        return d


@dataclass
class SufficientResult:
    verdict: str
    independence_number: int | None
    threshold: int

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "alpha": self.independence_number, "n_minus_F": self.threshold}


@dataclass
class ConditionReport:
    n: int
    conditions: dict[str, ConditionResult]
    sufficient: SufficientResult
    dn: DnProfile = field(repr=False)

    @property
    def failed(self) -> list[str]:
        return [k for k in CONDITION_NAMES if k in self.conditions and self.conditions[k].verdict == FAIL]

    @property
    def overall(self) -> str:
        if self.failed:
            return NOT_DIOPHANTINE
        if self.sufficient.verdict == PASS:
            return DIOPHANTINE_BY_SUFFICIENCY
        return POSSIBLY_DIOPHANTINE

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "overall": self.overall,
            "failed": self.failed,
            "conditions": {k: self.conditions[k].as_dict() for k in CONDITION_NAMES if k in self.conditions},
            "sufficient": self.sufficient.as_dict(),
        }


def dominance_violation(g_counts, d_counts) -> int | None:
    """Smallest ``k`` with ``sum(g[:k+1]) < sum(d[:k+1])``, or ``None`` if ``g`` dominates."""
    sg = sd = 0
    for k, (a, b) in enumerate(zip(g_counts, d_counts)):
        sg += a
        sd += b
        if sg < sd:
            return k
    return None


def _pad(g: Graph, n: int | None) -> Graph:
    if n is None or n == g.n:
        return g
    if n < g.n:
        raise ValueError(f"order {n} is smaller than the graph's {g.n} vertices")
    return Graph.from_edges(n, g.edges())


def check_conditions(
    g: Graph,
    n: int | None = None,
    budget: int | None = DEFAULT_BUDGET,
    early_exit: bool = False,
) -> ConditionReport:
    """Evaluate C1-C6 and the sufficient condition for ``g`` against ``D_n``.

    ``n`` defaults to the order of ``g``; a larger ``n`` pads ``g`` with
    isolated vertices.  Clique and independence numbers are computed
    exactly within ``budget`` search nodes; when the budget runs out the
    affected conditions report ``unknown`` rather than a verdict.
    With ``early_exit`` evaluation stops at the first failure.
    """
    g = _pad(g, n)
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    dn = profile(g.n)
    seq = degree_sequence(g)
    alpha: int | None = None

    def exact(fn):
        try:
            return fn(g, budget=budget, max_order=None)
        except SearchBudgetExceeded:
            return None

    def evaluate(name: str) -> ConditionResult:
        nonlocal alpha
        if name == "C1":
            lhs, rhs = g.edge_count, dn.edge_count
            return ConditionResult(name, "|E(G)| <= |E(D_n)|", PASS if lhs <= rhs else FAIL, lhs, rhs)
        if name == "C2":
            lhs, rhs = full_degree_count(g), dn.full_degree_count
            return ConditionResult(name, "F(G) <= F(D_n)", PASS if lhs <= rhs else FAIL, lhs, rhs)
        if name == "C3":
            lhs, rhs = exact(clique_number_exact), dn.clique_number
            verdict = UNKNOWN if lhs is None else PASS if lhs <= rhs else FAIL
            return ConditionResult(name, "Cl(G) <= Cl(D_n)", verdict, lhs, rhs)
        if name == "C4":
            alpha = exact(independence_number_exact)
            rhs = dn.independence_number
            verdict = UNKNOWN if alpha is None else PASS if alpha >= rhs else FAIL
            return ConditionResult(name, "alpha(G) >= alpha(D_n)", verdict, alpha, rhs)
        if name == "C5":
            lhs, rhs = min_degree(g), dn.min_degree
            return ConditionResult(name, "delta(G) <= delta(D_n)", PASS if lhs <= rhs else FAIL, lhs, rhs)
        k = dominance_violation(seq.counts, dn.degree_sequence.counts)
        return ConditionResult(
            name,
            "for all k: sum_{i<=k} g_i >= sum_{i<=k} d_i",
            PASS if k is None else FAIL,
            seq.partial_sums(),
            dn.degree_sequence.partial_sums(),
            violating_k=k,
        )

    results: dict[str, ConditionResult] = {}
    for name in EVALUATION_ORDER:
        results[name] = evaluate(name)
        if early_exit and results[name].verdict == FAIL:
            break

    if alpha is None and "C4" not in results:
        alpha = exact(independence_number_exact)
    threshold = g.n - dn.full_degree_count
    verdict = UNKNOWN if alpha is None else PASS if alpha >= threshold else FAIL
    return ConditionReport(g.n, results, SufficientResult(verdict, alpha, threshold), dn)


def check_sufficient(g: Graph, budget: int | None = DEFAULT_BUDGET) -> SufficientResult:
    """``alpha(G) >= n - F(D_n)`` guarantees a Diophantine labeling exists."""
    dn = profile(g.n)
    threshold = g.n - dn.full_degree_count
    try:
        alpha = independence_number_exact(g, budget=budget, max_order=None)
    except SearchBudgetExceeded:
        return SufficientResult(UNKNOWN, None, threshold)
    return SufficientResult(PASS if alpha >= threshold else FAIL, alpha, threshold)
