import random
from itertools import combinations

import pytest

from diograph.conditions import (
    DIOPHANTINE_BY_SUFFICIENCY,
    FAIL,
    NOT_DIOPHANTINE,
    PASS,
    POSSIBLY_DIOPHANTINE,
    UNKNOWN,
    check_conditions,
    check_sufficient,
    dominance_violation,
)
from diograph.corpus import CORPUS
from diograph.graphcore import Graph, make_complete, make_null
from diograph.labeler import LABELED, find_labeling
from diograph.maximal import build_dn, diophantine_rule, profile

EXPECTED_FAILURES = {
    "G1": ["C4"],
    "G2": ["C5", "C6"],
    "G3": ["C3"],
    "G4": ["C2", "C6"],
    "G5": ["C1", "C6"],
    "G6": ["C6"],
    "H11": [],
    "K3+N4": [],
}


def _random_spanning_subgraph(g, rnd, keep):
    perm = list(g.vertices)
    rnd.shuffle(perm)
    h = Graph.from_edges(g.n, [e for e in g.edges() if rnd.random() < keep])
    return h.permuted(perm)


@pytest.mark.parametrize("name", sorted(EXPECTED_FAILURES))
def test_corpus_failures(name):
    report = check_conditions(CORPUS[name]())
    assert report.failed == EXPECTED_FAILURES[name]


def test_corpus_reported_values():
    c = check_conditions(CORPUS["G1"]()).conditions
    assert c["C4"].graph_value == 2
    assert check_conditions(CORPUS["G3"]()).conditions["C3"].graph_value == 7
    assert check_conditions(CORPUS["G5"]()).conditions["C1"].graph_value == 42
    assert check_conditions(CORPUS["G2"]()).conditions["C6"].violating_k == 3
    assert check_conditions(CORPUS["G4"]()).conditions["C6"].violating_k == 9
    assert check_conditions(CORPUS["G6"]()).conditions["C6"].violating_k == 8


def test_h11_values():
    c = check_conditions(CORPUS["H11"]()).conditions
    values = {k: c[k].graph_value for k in ("C1", "C2", "C3", "C4", "C5")}
    assert values == {"C1": 37, "C2": 3, "C3": 6, "C4": 6, "C5": 3}


def test_overall_verdicts():
    assert check_conditions(CORPUS["G2"]()).overall == NOT_DIOPHANTINE
    assert check_conditions(CORPUS["H11"]()).overall == POSSIBLY_DIOPHANTINE
    assert check_conditions(CORPUS["K3+N4"]()).overall == DIOPHANTINE_BY_SUFFICIENCY


def test_sufficient_examples():
    res = check_sufficient(CORPUS["K3+N4"]())
    assert (res.verdict, res.independence_number, res.threshold) == (PASS, 4, 4)
    assert check_sufficient(make_complete(1)).verdict == PASS
    assert check_sufficient(build_dn(7).graph).verdict == FAIL


def test_dominance_violation():
    assert dominance_violation([0, 1, 2], [0, 1, 2]) is None
    assert dominance_violation([0, 0, 3], [0, 1, 2]) == 1
    assert dominance_violation([1, 0, 2], [0, 1, 2]) is None


def test_padding_with_isolated_vertices():
    report = check_conditions(make_complete(3), n=5)
    assert report.n == 5
    with pytest.raises(ValueError):
        check_conditions(make_complete(5), n=3)


def test_early_exit_stops_at_first_failure():
    report = check_conditions(CORPUS["G5"](), early_exit=True)
    assert list(report.conditions) == ["C1"]
    assert report.overall == NOT_DIOPHANTINE


def test_budget_exhaustion_reports_unknown():
    rnd = random.Random(7)
    n = 70
    g = Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rnd.random() < 0.5])
    report = check_conditions(g, budget=3)
    assert report.conditions["C3"].verdict == UNKNOWN
    assert report.conditions["C4"].verdict == UNKNOWN
    assert report.sufficient.verdict == UNKNOWN


def test_soundness_on_spanning_subgraphs(rng):
    # Every relabeled spanning subgraph of D_n is Diophantine, so no condition may fail.
    for n in range(1, 15):
        d = build_dn(n).graph
        for _ in range(15):
            h = _random_spanning_subgraph(d, rng, rng.choice([0.3, 0.7, 0.95, 1.0]))
            assert check_conditions(h).failed == []


def test_dominance_implies_count_conditions(rng):
    for _ in range(300):
        n = rng.randint(1, 14)
        g = Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < rng.random()])
        c = check_conditions(g).conditions
        if c["C6"].verdict == PASS:
            assert c["C1"].verdict == c["C2"].verdict == c["C5"].verdict == PASS


def test_sufficient_implies_labeling(rng):
    hits = 0
    for _ in range(200):
        n = rng.randint(1, 12)
        f = profile(n).full_degree_count
        # Graphs with a large independent set: edges only touch the first F vertices.
        core = list(range(1, f + 1))
        edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if u in core and rng.random() < 0.8]
        g = Graph.from_edges(n, edges).permuted(rng.sample(range(1, n + 1), n))
        if check_sufficient(g).verdict == PASS:
            hits += 1
            assert find_labeling(g, diophantine_rule(n)).verdict == LABELED
    assert hits > 100


def test_null_graph_is_trivially_fine():
    report = check_conditions(make_null(9))
    assert report.failed == [] and report.sufficient.verdict == PASS
