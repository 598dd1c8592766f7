import json
from itertools import combinations, permutations
from math import gcd

import pytest

from diograph.corpus import CORPUS
from diograph.graphcore import Graph, LabeledGraph, is_spanning_subgraph, make_path
from diograph.labeler import (
    LABELED,
    NONE,
    UNKNOWN,
    find_labeling,
    is_labeling_isomorphic,
    load_certificate,
    relabel,
    verify_labeling,
)
from diograph.maximal import LabelRule, build_dn, build_maximal_gamma, diophantine_rule, prime_rule


def _brute_force_labelable(g, n):
    edges = g.edges()
    return any(
        all(n % gcd(p[u - 1], p[v - 1]) == 0 for u, v in edges) for p in permutations(range(1, n + 1))
    )


def test_verify_examples():
    d9 = build_dn(9)
    assert verify_labeling(d9.graph, d9.labels, diophantine_rule(9))
    rule3 = LabelRule((2, 4, 6), lambda a, b: 3 % gcd(a, b) == 0)
    assert not verify_labeling(make_path(3), {1: 2, 2: 4, 3: 6}, rule3)
    anything = LabelRule(tuple("xyz"), lambda a, b: True)
    assert verify_labeling(Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)]), ["x", "z", "y"], anything)


def test_verify_rejects_non_bijections():
    rule = diophantine_rule(3)
    with pytest.raises(ValueError):
        verify_labeling(make_path(3), {1: 1, 2: 1, 3: 2}, rule)
    with pytest.raises(ValueError):
        verify_labeling(make_path(3), {1: 1, 2: 2, 3: 4}, rule)
    with pytest.raises(ValueError):
        verify_labeling(make_path(3), {1: 1, 2: 2}, rule)


def test_find_labeling_examples():
    out = find_labeling(CORPUS["K3+N4"](), diophantine_rule(7))
    assert out.verdict == LABELED
    assert verify_labeling(CORPUS["K3+N4"](), out.labeling, diophantine_rule(7))
    assert find_labeling(CORPUS["G2"](), diophantine_rule(7)).verdict == NONE
    assert find_labeling(CORPUS["H11"](), diophantine_rule(11)).verdict == NONE


@pytest.mark.parametrize("name", ["G1", "G2", "G3", "G4", "G5", "G6", "H11"])
def test_corpus_has_no_labeling(name):
    g = CORPUS[name]()
    out = find_labeling(g, diophantine_rule(g.n), budget=10**6)
    assert out.verdict == NONE


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        find_labeling(make_path(3), diophantine_rule(4))


def test_certificate_sorted_and_loadable():
    out = find_labeling(CORPUS["K3+N4"](), diophantine_rule(7))
    cert = out.certificate()
    assert [v for v, _ in cert] == list(range(1, 8))
    assert load_certificate(json.dumps(out.as_dict())) == out.labeling
    with pytest.raises(ValueError):
        load_certificate("[[1, 2], [1, 3]]")


def test_completeness_on_spanning_subgraphs(rng):
    for _ in range(100):
        n = rng.randint(1, 10)
        d = build_dn(n).graph
        h = Graph.from_edges(n, [e for e in d.edges() if rng.random() < 0.7]).permuted(rng.sample(range(1, n + 1), n))
        rule = diophantine_rule(n)
        out = find_labeling(h, rule)
        assert out.verdict == LABELED
        assert verify_labeling(h, out.labeling, rule)
        assert is_spanning_subgraph(relabel(h, out.labeling, rule), build_maximal_gamma(rule).graph)


def test_generic_rule_labeling(rng):
    rule = prime_rule(8)
    gamma = build_maximal_gamma(rule).graph
    h = Graph.from_edges(8, [e for e in gamma.edges() if rng.random() < 0.6]).permuted(rng.sample(range(1, 9), 8))
    out = find_labeling(h, rule)
    assert out.verdict == LABELED and verify_labeling(h, out.labeling, rule)
    # K_8 is not prime-labelable: 2, 4, 6, 8 would share a factor.
    assert find_labeling(Graph.from_edges(8, combinations(range(1, 9), 2)), rule).verdict == NONE


def test_agrees_with_brute_force_small(rng):
    for n in range(1, 7):
        for _ in range(15):
            g = Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.7])
            found = find_labeling(g, diophantine_rule(n)).verdict == LABELED
            assert found == _brute_force_labelable(g, n)


def test_budget_exhaustion_is_unknown():
    out = find_labeling(CORPUS["H11"](), diophantine_rule(11), budget=1)
    assert out.verdict == UNKNOWN and out.labeling is None


def test_labeling_isomorphism_examples(rng):
    d7 = build_dn(7)
    assert is_labeling_isomorphic(d7, d7)
    perm = rng.sample(range(1, 8), 7)
    moved = LabeledGraph(d7.graph.permuted(perm), tuple(d7.labels[perm.index(v)] for v in range(1, 8)))
    assert is_labeling_isomorphic(d7, moved)
    swapped = list(d7.labels)
    swapped[4], swapped[5] = swapped[5], swapped[4]
    assert not is_labeling_isomorphic(d7, LabeledGraph(d7.graph, tuple(swapped)))
    with pytest.raises(ValueError):
        is_labeling_isomorphic(d7, LabeledGraph(d7.graph, tuple(range(2, 9))))
