"""Simple undirected graphs on vertices ``1..n`` stored as packed bit rows.

Row ``v - 1`` is a Python int whose bit ``u - 1`` is set iff ``uv`` is an
edge.  Graphs are immutable; every mutation returns a new graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import GraphParseError, ResourceLimitError, SearchBudgetExceeded

DEFAULT_SOLVER_ORDER_CAP = 64


def _bits(mask: int):
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count must equal n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i + 1} references a vertex outside 1..{self.n}")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i + 1}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i + 1} and {j + 1}")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # Rows known symmetric and loop-free by construction; skips the O(m) check.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            _check_pair(n, u, v)
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        return cls._trusted(n, tuple(rows))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> list[int]:
        return [j + 1 for j in _bits(self.rows[v - 1])]

    def degree(self, v: int) -> int:
        return self.rows[v - 1].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(i + 1, j + 1) for i, row in enumerate(self.rows) for j in _bits(row >> (i + 1) << (i + 1))]

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.rows)))

    def permuted(self, perm: Mapping[int, int] | Sequence[int]) -> Graph:
        """Image of the graph under the vertex map ``v -> perm[v]``.

        A sequence is read as ``perm[v - 1]`` for vertex ``v``.
        """
        image = _as_vertex_map(self.n, perm)
        return Graph.from_edges(self.n, ((image[u], image[v]) for u, v in self.edges()))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (1 <= u <= n and 1 <= v <= n):
        raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
    if u == v:
        raise ValueError(f"self-loop at vertex {u} is not allowed")


def _as_vertex_map(n: int, perm: Mapping[int, int] | Sequence[int]) -> dict[int, int]:
    image = dict(perm) if isinstance(perm, Mapping) else {v: perm[v - 1] for v in range(1, n + 1)}
    if sorted(image) != list(range(1, n + 1)) or sorted(image.values()) != list(range(1, n + 1)):
        raise ValueError("vertex map must be a permutation of 1..n")
    return image


@dataclass(frozen=True)
class LabeledGraph:
    """A graph together with a bijection ``vertex -> label``.

    ``labels[v - 1]`` is the label of vertex ``v``.
    """

    graph: Graph
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError("need exactly one label per vertex")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")

    def label(self, v: int):
        return self.labels[v - 1]

    def vertex_of(self, label) -> int:
        return self.labels.index(label) + 1

    @property
    def universe(self) -> frozenset:
        return frozenset(self.labels)


@dataclass(frozen=True)
class DegreeSequence:
    """Counts ``g_i`` of vertices of degree ``i`` for ``i = 0..n-1``."""

    counts: tuple[int, ...]

    @property
    def order(self) -> int:
        return sum(self.counts)

    def degree_sum(self) -> int:
        return sum(i * g for i, g in enumerate(self.counts))

    def partial_sums(self) -> list[int]:
        out, total = [], 0
        for g in self.counts:
            total += g
            out.append(total)
        return out

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.counts)) + ")"


# -- constructors ----------------------------------------------------------


def make_null(n: int) -> Graph:
    if n < 1:
        raise ValueError("null graph needs n >= 1")
    return Graph._trusted(n, (0,) * n)


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << i) for i in range(n)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def join(g: Graph, h: Graph) -> Graph:
    """``G + H``: disjoint union plus every edge between the two parts.

    Vertices of ``h`` are renumbered ``g.n + 1 .. g.n + h.n``.
    """
    n = g.n + h.n
    low = (1 << g.n) - 1
    high = ((1 << h.n) - 1) << g.n
    rows = [row | high for row in g.rows] + [(row << g.n) | low for row in h.rows]
    return Graph._trusted(n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g.n, u, v)
    rows = list(g.rows)
    rows[u - 1] |= 1 << (v - 1)
    rows[v - 1] |= 1 << (u - 1)
    return Graph._trusted(g.n, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g.n, u, v)
    rows = list(g.rows)
    rows[u - 1] &= ~(1 << (v - 1))
    rows[v - 1] &= ~(1 << (u - 1))
    return Graph._trusted(g.n, tuple(rows))


def is_spanning_subgraph(h: Graph, g: Graph) -> bool:
    """True iff ``h`` has the same vertex set as ``g`` and ``E(h)`` is contained in ``E(g)``."""
    return h.n == g.n and all(rh & ~rg == 0 for rh, rg in zip(h.rows, g.rows))


# -- degree invariants -----------------------------------------------------


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    return min(g.degrees()) if g.n else 0


def full_degree_count(g: Graph) -> int:
    return sum(1 for d in g.degrees() if d == g.n - 1)


def degree_sequence(g: Graph) -> DegreeSequence:
    counts = [0] * max(g.n, 1)
    for d in g.degrees():
        counts[d] += 1
    return DegreeSequence(tuple(counts[: g.n]) if g.n else ())


# -- exact clique / independence ------------------------------------------


def max_clique(g: Graph, budget: int | None = None, max_order: int | None = DEFAULT_SOLVER_ORDER_CAP) -> list[int]:
    """A maximum clique of ``g`` (sorted vertex ids).

    Branch and bound with greedy-colouring bounds over bit rows.  ``budget``
    caps the number of search nodes; running out raises
    :class:`SearchBudgetExceeded` carrying the best clique size found.
    """
    if max_order is not None and g.n > max_order:
        raise ResourceLimitError(f"exact clique search capped at n={max_order} (got {g.n}); pass max_order=None to override")
    if g.n == 0:
        return []

    # Highest degree first, so the lowest bit of a candidate set is the
    # most constrained vertex when colouring.
    order = sorted(range(g.n), key=lambda i: (-g.rows[i].bit_count(), i))
    pos = {v: k for k, v in enumerate(order)}
    adj = [0] * g.n
    for k, v in enumerate(order):
        for j in _bits(g.rows[v]):
            adj[k] |= 1 << pos[j]

    best: list[int] = _greedy_clique(adj)
    nodes = 0

    def colour_order(cand: int) -> list[tuple[int, int]]:
        out = []
        colour = 0
        uncoloured = cand
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~adj[v] & ~low
                uncoloured &= ~low
                out.append((v, colour))
        return out

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded("clique search budget exhausted", len(best), nodes)
        for v, colour in reversed(colour_order(cand)):
            if len(clique) + colour <= len(best):
                return
            clique.append(v)
            sub = cand & adj[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return sorted(order[k] + 1 for k in best)


def _greedy_clique(adj: list[int]) -> list[int]:
    clique: list[int] = []
    cand = (1 << len(adj)) - 1
    while cand:
        v = max(_bits(cand), key=lambda k: (adj[k] & cand).bit_count())
        clique.append(v)
        cand &= adj[v]
    return clique


def clique_number_exact(g: Graph, budget: int | None = None, max_order: int | None = DEFAULT_SOLVER_ORDER_CAP) -> int:
    return len(max_clique(g, budget=budget, max_order=max_order))


def max_independent_set(g: Graph, budget: int | None = None, max_order: int | None = DEFAULT_SOLVER_ORDER_CAP) -> list[int]:
    return max_clique(g.complement(), budget=budget, max_order=max_order)


def independence_number_exact(g: Graph, budget: int | None = None, max_order: int | None = DEFAULT_SOLVER_ORDER_CAP) -> int:
    return len(max_independent_set(g, budget=budget, max_order=max_order))


# -- serialization ---------------------------------------------------------

FORMATS = ("edges", "json", "graph6", "dot")
_FORMAT_ALIASES = {"edge-list": "edges", "edgelist": "edges", "g6": "graph6"}


def _norm_format(fmt: str) -> str:
    fmt = _FORMAT_ALIASES.get(fmt, fmt)
    if fmt not in FORMATS:
        raise ValueError(f"unknown graph format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return fmt


def serialize_graph(g: Graph, fmt: str = "edges") -> str:
    fmt = _norm_format(fmt)
    if fmt == "edges":
        lines = [f"# n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}) + "\n"
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    body = "".join(f"  {v};\n" for v in g.vertices) + "".join(f"  {u} -- {v};\n" for u, v in g.edges())
    return "graph G {\n" + body + "}\n"


def parse_graph(text: str, fmt: str = "edges", n: int | None = None) -> Graph:
    """Parse ``text`` in the given format.

    For edge lists the order comes from ``n``, else a ``# n=<int>`` header
    comment, else the largest vertex id mentioned.
    """
    fmt = _norm_format(fmt)
    if fmt == "edges":
        return _parse_edge_list(text, n)
    if fmt == "json":
        return _parse_json(text)
    if fmt == "graph6":
        return from_graph6(text.strip())
    raise ValueError("dot is an export-only format")


def _parse_edge_list(text: str, n: int | None) -> Graph:
    header_n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        comment = comment.strip().replace(" ", "")
        if comment.startswith("n=") and header_n is None:
            try:
                header_n = int(comment[2:])
            except ValueError:
                raise GraphParseError("bad order header", line=lineno) from None
        fields = body.split()
        if not fields:
            continue
        if len(fields) != 2:
            raise GraphParseError(f"expected 'u v', got {body.strip()!r}", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex id in {body.strip()!r}", line=lineno) from None
        if u < 1 or v < 1:
            raise GraphParseError("vertex ids are 1-based", line=lineno)
        if u == v:
            raise GraphParseError(f"self-loop at {u}", line=lineno)
        edges.append((u, v, lineno))
    order = n if n is not None else header_n
    if order is None:
        order = max((max(u, v) for u, v, _ in edges), default=0)
    for u, v, lineno in edges:
        if max(u, v) > order:
            raise GraphParseError(f"vertex {max(u, v)} exceeds order {order}", line=lineno)
    return Graph.from_edges(order, ((u, v) for u, v, _ in edges))


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, line=exc.lineno, offset=exc.colno) from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphParseError('expected an object with keys "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphParseError('"n" must be a nonnegative integer')
    edges = []
    for k, e in enumerate(data["edges"]):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphParseError(f"edge #{k} must be a pair of integers", offset=k)
        u, v = e
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise GraphParseError(f"edge #{k} ({u}, {v}) is invalid for n={n}", offset=k)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph6 writer supports n < 258048")
    bits = [g.rows[j] >> i & 1 for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6]
        out.append(sum(b << (5 - t) for t, b in enumerate(chunk)) + 63)
    return bytes(out).decode("ascii")


def from_graph6(s: str) -> Graph:
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = s.encode("ascii")
    if not data:
        raise GraphParseError("empty graph6 string", offset=0)
    for k, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphParseError(f"invalid graph6 byte {c!r}", offset=k)
    vals = [c - 63 for c in data]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise GraphParseError("unsupported graph6 size header", offset=0)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        start = 4
    else:
        n = vals[0]
        body = vals[1:]
        start = 1
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphParseError(f"graph6 body has {len(body)} bytes, expected {need}", offset=start)
    bits = [(x >> (5 - t)) & 1 for x in body for t in range(6)]
    pairs = ((i, j) for j in range(n) for i in range(j))
    edges = [(i + 1, j + 1) for (i, j), b in zip(pairs, bits) if b]
    return Graph.from_edges(n, edges)
