"""Named test graphs.

G1..G6 each violate at least one necessary condition; H11 satisfies all
of them yet has no Diophantine labeling; K3+N4 is Diophantine.
"""

from __future__ import annotations

from .graphcore import Graph, join, make_complete, make_cycle, make_null

_COUNTEREXAMPLES = {
    "G1": (7, [(1, 2), (1, 3), (1, 4), (1, 5), (1, 7), (2, 3), (2, 4), (2, 5), (2, 7), (3, 4), (3, 5), (3, 7),
               (4, 5), (5, 6), (6, 7)]),
    "G3": (11, [(1, 5), (1, 6), (1, 7), (2, 5), (2, 6), (2, 7), (3, 5), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7),
                (5, 6), (5, 7), (5, 8), (5, 9), (5, 10), (5, 11), (6, 7), (6, 8), (6, 9), (6, 10), (6, 11),
                (7, 8), (7, 9), (7, 10), (7, 11), (8, 9), (8, 10), (8, 11), (9, 10), (9, 11), (10, 11)]),
    "G5": (11, [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 11), (2, 3), (2, 4),
                (2, 5), (2, 7), (2, 8), (2, 9), (2, 10), (2, 11), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 9),
                (3, 10), (3, 11), (4, 5), (4, 6), (4, 8), (4, 9), (4, 10), (4, 11), (5, 6), (5, 8), (5, 9),
                (5, 10), (5, 11), (6, 7), (6, 8), (6, 9), (6, 10), (6, 11)]),
}

# Hubs 2..4 adjacent to everything; 1 adjacent to 5..10; 5 adjacent to 7..10.  G6
# additionally has the edge 5-6.
_HUB_EDGES = (
    [(2, 3), (2, 4), (3, 4)]
    + [(h, v) for h in (2, 3, 4) for v in range(1, 12) if v not in (2, 3, 4)]
    + [(1, v) for v in range(5, 11)]
    + [(5, v) for v in range(7, 11)]
)


def counterexample_g1() -> Graph:
    return Graph.from_edges(*_COUNTEREXAMPLES["G1"])


def counterexample_g2() -> Graph:
    """``C_4 + null_3``."""
    return join(make_cycle(4), make_null(3))


def counterexample_g3() -> Graph:
    return Graph.from_edges(*_COUNTEREXAMPLES["G3"])


def counterexample_g4() -> Graph:
    """``K_4 + null_7``."""
    return join(make_complete(4), make_null(7))


def counterexample_g5() -> Graph:
    return Graph.from_edges(*_COUNTEREXAMPLES["G5"])


def counterexample_g6() -> Graph:
    return Graph.from_edges(11, _HUB_EDGES + [(5, 6)])


def unlabelable_h11() -> Graph:
    """Order 11; satisfies every necessary condition but admits no Diophantine labeling."""
    return Graph.from_edges(11, _HUB_EDGES)


def k3_join_null4() -> Graph:
    """``K_3 + null_4`` (order 7), which meets the sufficient condition."""
    return join(make_complete(3), make_null(4))


CORPUS = {
    "G1": counterexample_g1,
    "G2": counterexample_g2,
    "G3": counterexample_g3,
    "G4": counterexample_g4,
    "G5": counterexample_g5,
    "G6": counterexample_g6,
    "H11": unlabelable_h11,
    "K3+N4": k3_join_null4,
}
