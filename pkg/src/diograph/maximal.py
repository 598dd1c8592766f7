"""Maximal Diophantine graphs ``D_n`` and maximal gamma-labeled graphs.

``D_n`` has vertices ``1..n`` labeled by themselves, with ``a ~ b`` iff
``gcd(a, b)`` divides ``n``.  Every counting function here comes in a
closed form computed from ``n`` alone; the tests cross-check each one
against the constructed graph.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Hashable, Sequence

import numpy as np

from .errors import ResourceLimitError
from .graphcore import (
    DegreeSequence,
    Graph,
    LabeledGraph,
    clique_number_exact,
    independence_number_exact,
)
from .numtheory import (
    critical_powers,
    factorize,
    gamma_x,
    omega,
    prime_pi,
    primes_up_to,
    tau,
)

DEFAULT_BUILD_CAP = 20000
DEFAULT_AUDIT_CAP = 120


@dataclass(frozen=True)
class LabelRule:
    """Symmetric compatibility predicate over a finite label universe."""

    universe: tuple[Hashable, ...]
    compatible: Callable[[Hashable, Hashable], bool]
    name: str = "custom"
    # Set by diophantine_rule so builders can take the vectorised gcd path.
    diophantine_n: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("label universe must not contain duplicates")

    def __len__(self) -> int:
        return len(self.universe)


def diophantine_rule(n: int) -> LabelRule:
    return LabelRule(tuple(range(1, n + 1)), lambda a, b: n % gcd(a, b) == 0, f"diophantine({n})", n)


def prime_rule(n: int) -> LabelRule:
    return LabelRule(tuple(range(1, n + 1)), lambda a, b: gcd(a, b) == 1, name=f"prime({n})")


def build_dn(n: int, cap: int = DEFAULT_BUILD_CAP) -> LabeledGraph:
    """``D_n`` with the identity labeling."""
    if n < 1:
        raise ValueError("D_n needs n >= 1")
    if n > cap:
        raise ResourceLimitError(f"D_{n} exceeds the build cap {cap}")
    return LabeledGraph(_dn_graph(n), tuple(range(1, n + 1)))


def _dn_graph(n: int) -> Graph:
    labels = np.arange(1, n + 1, dtype=np.int32)
    adj = (n % np.gcd.outer(labels, labels)) == 0
    np.fill_diagonal(adj, False)
    # Row v as an int with bit u-1 set: pack little-endian bit order.
    packed = np.packbits(adj, axis=1, bitorder="little")
    rows = tuple(int.from_bytes(r.tobytes(), "little") for r in packed)
    return Graph._trusted(n, rows)


def build_maximal_gamma(rule: LabelRule) -> LabeledGraph:
    """Maximal gamma-labeled graph: vertex ``i`` carries ``universe[i-1]``; edges wherever the rule allows."""
    if rule.diophantine_n is not None:
        return LabeledGraph(_dn_graph(rule.diophantine_n), rule.universe)
    k = len(rule.universe)
    rows = [0] * k
    for i in range(k):
        a = rule.universe[i]
        for j in range(i + 1, k):
            if rule.compatible(a, rule.universe[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return LabeledGraph(Graph._trusted(k, tuple(rows)), rule.universe)


# -- structural lemmas -----------------------------------------------------


def _crit(p: int, n: int) -> int:
    c = p
    while n % c == 0:
        c *= p
    return c


def nonadjacency_witness(n: int, a: int, b: int) -> int | None:
    """Smallest prime ``p`` whose critical power for ``n`` divides both labels, else ``None``."""
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise ValueError("need distinct labels in 1..n")
    g = gcd(a, b)
    for p, _ in factorize(g):
        if g % _crit(p, n) == 0:
            return p
    return None


def _is_critical_power(n: int, a: int) -> bool:
    fac = factorize(a)
    return len(fac) == 1 and _crit(fac[0][0], n) == a


def is_full_degree_label(n: int, a: int) -> bool:
    """Whether label ``a`` has degree ``n - 1`` in ``D_n``."""
    if not 1 <= a <= n:
        raise ValueError("label must lie in 1..n")
    divides = n % a == 0
    large_critical = n < 2 * a < 2 * n and _is_critical_power(n, a)
    assert not (divides and large_critical), "full-degree cases must be exclusive"
    return divides or large_critical


def _union_of_multiples(n: int, moduli: Sequence[int]) -> int:
    """``|{1 <= m <= n : some modulus divides m}|`` for pairwise coprime moduli.

    Inclusion-exclusion restricted to subsets whose product stays ``<= n``;
    larger products contribute ``floor(n / prod) = 0``.
    """
    moduli = sorted(moduli)
    total = 0

    def walk(start: int, product: int, sign: int) -> None:
        nonlocal total
        for i in range(start, len(moduli)):
            q = product * moduli[i]
            if q > n:
                break
            total += sign * (n // q)
            walk(i + 1, q, -sign)

    walk(0, 1, 1)
    return total


def full_degree_count_ie(n: int) -> int:
    """``F(D_n)`` by inclusion-exclusion over critical prime powers below ``n/2``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    small = [c for c in critical_powers(n).values() if 2 * c < n]
    return n - _union_of_multiples(n, small)


def full_degree_count_closed(n: int) -> int:
    """``F(D_n) = tau(n) + pi(n-1) - pi(n/2) + gamma_{n/2}(n)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return tau(n) + prime_pi(n - 1) - prime_pi(n // 2) + gamma_x(Fraction(n, 2), n)


def full_degree_count_prime(p: int) -> int:
    """Prime-order specialisation ``pi(p) - pi(p/2) + 1``."""
    return prime_pi(p) - prime_pi(p // 2) + 1


def clique_number_closed(n: int) -> int:
    """``Cl(D_n) = tau(n) + pi(n) - omega(n) + gamma_1(n)``; ``Cl(D_1) = 1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    return tau(n) + prime_pi(n) - omega(n) + gamma_x(1, n)


def independence_number_closed(n: int) -> int:
    """``alpha(D_n) = max_p floor(n / p^(v_p(n)+1))``, at least 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    best = 1
    for p in primes_up_to(n):
        best = max(best, n // _crit(p, n))
    return best


def is_complete_dn(n: int) -> bool:
    """Every prime ``p <= n/2`` divides ``n`` with critical power above ``n/2``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return all(n % p == 0 and 2 * _crit(p, n) > n for p in primes_up_to(n // 2))


def reduced_label(n: int, a: int) -> int:
    if not 1 <= a <= n:
        raise ValueError("label must lie in 1..n")
    return a // gcd(a, n)


def degree_of_label(n: int, a: int) -> int:
    """Degree of label ``a`` in ``D_n`` from the prime factors of its reduced label."""
    if not 1 <= a <= n:
        raise ValueError("label must lie in 1..n")
    reduced = reduced_label(n, a)
    if reduced == 1:
        return n - 1
    moduli = [_crit(p, n) for p, _ in factorize(reduced)]
    return n - _union_of_multiples(n, moduli)


def label_degrees(n: int) -> list[int]:
    """``degree_of_label(n, a)`` for ``a = 1..n``."""
    return [degree_of_label(n, a) for a in range(1, n + 1)]


def edge_count(n: int) -> int:
    total = sum(label_degrees(n))
    assert total % 2 == 0
    return total // 2


# -- minimum degree --------------------------------------------------------


@dataclass(frozen=True)
class MinLabelResult:
    """Smallest label of minimum degree in ``D_n`` and a witness in ``(n/2, n)``.

    ``status`` is ``"ok"``, ``"complete"`` (``D_n`` complete, min label 1), or
    ``"theorem-mismatch"`` when the critical-power product disagrees with the
    brute-force scan; both values are kept either way.
    """

    n: int
    status: str
    min_label: int
    witness_high_label: int | None
    r: int
    factors: tuple[int, ...]
    min_degree: int
    scanned_min_label: int
    scanned_min_degree: int


def min_degree_min_label(n: int) -> MinLabelResult:
    if n < 1:
        raise ValueError("n must be >= 1")
    degs = _dn_graph(n).degrees()
    delta = min(degs)
    scanned = degs.index(delta) + 1

    if is_complete_dn(n):
        return MinLabelResult(n, "complete", 1, None, 0, (), delta, scanned, delta)

    seq = sorted(c for c in critical_powers(n).values() if 2 * c < n)
    product, r = 1, 0
    while r < len(seq) and product * seq[r] < n:
        product *= seq[r]
        r += 1

    witness = product
    while 2 * witness <= n:
        witness *= 2
    ok = (
        product == scanned
        and degree_of_label(n, product) == delta
        and n < 2 * witness < 2 * n
        and degs[witness - 1] == delta
    )
    return MinLabelResult(
        n,
        "ok" if ok else "theorem-mismatch",
        product,
        witness,
        r,
        tuple(seq[:r]),
        degree_of_label(n, product),
        scanned,
        delta,
    )


# -- profiles ---------------------------------------------------------------


@dataclass(frozen=True)
class DnProfile:
    n: int
    edge_count: int
    full_degree_count: int
    clique_number: int
    independence_number: int
    min_degree: int
    degree_sequence: DegreeSequence
    audited: bool = field(default=False, compare=False)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["degree_sequence"] = list(self.degree_sequence.counts)
        return d

    def csv_row(self) -> str:
        return (
            f"{self.n},{self.edge_count},{self.full_degree_count},{self.clique_number},"
            f'{self.independence_number},{self.min_degree},"{self.degree_sequence}"'
        )


TABLE_HEADER = "n,|E(D_n)|,F(D_n),Cl(D_n),alpha(D_n),delta(D_n),S_{D_n}"


class AuditMismatch(AssertionError):
    pass


def profile(n: int, audit: bool = False, audit_cap: int = DEFAULT_AUDIT_CAP) -> DnProfile:
    """Table row for ``D_n``.

    Closed forms supply every field.  With ``audit`` (and ``n <= audit_cap``)
    the graph is built and each field is recomputed directly, raising
    :class:`AuditMismatch` on any disagreement.
    """
    degs = label_degrees(n)
    counts = [0] * n
    for d in degs:
        counts[d] += 1
    prof = DnProfile(
        n=n,
        edge_count=sum(degs) // 2,
        full_degree_count=full_degree_count_closed(n),
        clique_number=clique_number_closed(n),
        independence_number=independence_number_closed(n),
        min_degree=min(degs),
        degree_sequence=DegreeSequence(tuple(counts)),
    )
    if audit and n <= audit_cap:
        g = _dn_graph(n)
        built_degs = g.degrees()
        checks = {
            "degrees": (built_degs, degs),
            "full_degree_count": (built_degs.count(n - 1), prof.full_degree_count),
            "clique_number": (clique_number_exact(g, max_order=None), prof.clique_number),
            "independence_number": (independence_number_exact(g, max_order=None), prof.independence_number),
        }
        for name, (direct, closed) in checks.items():
            if direct != closed:
                raise AuditMismatch(f"D_{n} {name}: graph gives {direct}, closed form gives {closed}")
        prof = DnProfile(**{**prof.__dict__, "audited": True})
    return prof
