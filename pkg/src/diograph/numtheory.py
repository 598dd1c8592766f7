"""Exact integer arithmetic: primes, valuations, divisor functions.

All functions work on plain Python ints.  Prime counting goes through a
lazily grown :class:`PrimeTable` whose size is capped (default ``10**6``,
overridable with the ``DIOGRAPH_SIEVE_LIMIT`` environment variable);
anything past the cap raises instead of silently allocating more.
"""

from __future__ import annotations

import os
import threading
from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from math import isqrt, prod
from numbers import Rational

from .errors import OutOfRangeError, ResourceLimitError

DEFAULT_SIEVE_LIMIT = 10**6
INT64_MAX = 2**63 - 1

Factorization = tuple[tuple[int, int], ...]


def sieve_limit() -> int:
    """Current sieve cap: ``DIOGRAPH_SIEVE_LIMIT`` if set, else 10**6."""
    raw = os.environ.get("DIOGRAPH_SIEVE_LIMIT")
    if raw is None:
        return DEFAULT_SIEVE_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"DIOGRAPH_SIEVE_LIMIT must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("DIOGRAPH_SIEVE_LIMIT must be positive")
    return value


@dataclass(frozen=True)
class PrimeTable:
    """Primes up to ``limit`` with O(1) membership and prime counting."""

    limit: int
    primes: tuple[int, ...]
    _flags: bytes = field(repr=False)
    _counts: array = field(repr=False)

    def is_prime(self, x: int) -> bool:
        if x > self.limit:
            raise OutOfRangeError(f"{x} exceeds prime table limit {self.limit}")
        return x >= 2 and bool(self._flags[x])

    def pi(self, x: int) -> int:
        if x < 0:
            raise OutOfRangeError("prime_pi is defined for nonnegative x")
        if x > self.limit:
            raise OutOfRangeError(f"{x} exceeds prime table limit {self.limit}")
        return self._counts[x]

    def __contains__(self, x: int) -> bool:
        return self.is_prime(x)

    def __len__(self) -> int:
        return len(self.primes)


def sieve(limit: int, max_limit: int | None = None) -> PrimeTable:
    """Sieve of Eratosthenes over ``[0, limit]``."""
    if limit < 1:
        raise OutOfRangeError("sieve limit must be >= 1")
    cap = sieve_limit() if max_limit is None else max_limit
    if limit > cap:
        raise ResourceLimitError(f"sieve limit {limit} exceeds configured cap {cap}")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = 0
    flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    primes = tuple(i for i in range(2, limit + 1) if flags[i])
    counts = array("l", accumulate(flags))
    return PrimeTable(limit, primes, bytes(flags), counts)


_table: PrimeTable | None = None
_table_lock = threading.Lock()


def prime_table(at_least: int = 1) -> PrimeTable:
    """Shared table covering ``at_least``; grows by doubling up to the cap."""
    global _table
    table = _table
    if table is not None and table.limit >= at_least:
        return table
    cap = sieve_limit()
    if at_least > cap:
        raise ResourceLimitError(f"{at_least} is beyond the sieve cap {cap}")
    with _table_lock:
        if _table is None or _table.limit < at_least:
            size = max(1024, _table.limit * 2 if _table else 0)
            while size < at_least:
                size *= 2
            _table = sieve(min(size, cap), max_limit=cap)
        return _table


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x <= sieve_limit():
        return prime_table(x).is_prime(x)
    if x % 2 == 0:
        return False
    return all(x % d for d in range(3, isqrt(x) + 1, 2))


def prime_pi(x: int) -> int:
    """Number of primes in ``[2, x]``."""
    if x < 2:
        if x < 0:
            raise OutOfRangeError("prime_pi is defined for nonnegative x")
        return 0
    return prime_table(x).pi(x)


def primes_up_to(x: int) -> tuple[int, ...]:
    if x < 2:
        return ()
    table = prime_table(x)
    return table.primes[: table.pi(x)]


def factorize(n: int) -> Factorization:
    """Prime factorization as ascending ``(prime, exponent)`` pairs; ``()`` for 1."""
    if n < 1:
        raise OutOfRangeError("factorize needs n >= 1")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        d += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def omega(n: int) -> int:
    """Number of distinct prime divisors."""
    return len(factorize(n))


def tau(n: int) -> int:
    """Number of positive divisors."""
    return prod(e + 1 for _, e in factorize(n))


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def valuation(p: int, n: int) -> int:
    """Largest ``k`` with ``p**k`` dividing ``n``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise OutOfRangeError("valuation needs n >= 1")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def critical_prime_power(p: int, n: int) -> int:
    """Smallest power of ``p`` that does not divide ``n``: ``p**(v_p(n) + 1)``."""
    value = p ** (valuation(p, n) + 1)
    if value > INT64_MAX:
        raise OutOfRangeError(f"critical prime power {p}^{valuation(p, n) + 1} overflows 64 bits")
    return value


def critical_powers(n: int, below: int | None = None) -> dict[int, int]:
    """Map ``p -> p**(v_p(n)+1)`` for primes ``p <= n`` whose critical power is ``< below``.

    ``below`` defaults to ``n + 1`` (critical powers that can occur as labels).
    """
    bound = n + 1 if below is None else below
    out = {}
    for p in primes_up_to(n):
        if p >= bound:
            break
        c = p
        while n % c == 0:
            c *= p
        if c < bound:
            out[p] = c
    return out


def gamma_x(x: int | Rational, n: int) -> int:
    """Count critical prime powers ``c`` of primes dividing ``n`` with ``x < c < n``.

    ``x`` may be an int or any exact rational (e.g. ``Fraction(n, 2)``);
    floats are refused so that ``n/2`` boundaries stay exact.
    """
    if isinstance(x, float):
        raise TypeError("gamma_x threshold must be exact (int or Fraction)")
    x = Fraction(x)
    if x < 0:
        raise ValueError("gamma_x threshold must be nonnegative")
    if x >= n:
        raise ValueError(f"gamma_x needs x < n (got x={x}, n={n})")
    count = 0
    for p, _ in factorize(n):
        c = critical_prime_power(p, n)
        if x < c < n:
            count += 1
    return count
