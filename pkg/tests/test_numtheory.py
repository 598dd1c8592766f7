from fractions import Fraction
from math import prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from diograph.errors import OutOfRangeError, ResourceLimitError
from diograph.numtheory import (
    critical_prime_power,
    divisors,
    factorize,
    gamma_x,
    is_prime,
    omega,
    prime_pi,
    sieve,
    tau,
    valuation,
)


def _trial_division_is_prime(x):
    return x >= 2 and all(x % d for d in range(2, int(x**0.5) + 1))


def _gamma_oracle(x, n):
    # Enumerate prime divisors by trial division and their critical powers directly.
    count = 0
    for p in range(2, n + 1):
        if n % p == 0 and _trial_division_is_prime(p):
            k = 1
            while n % p**k == 0:
                k += 1
            if x < p**k < n:
                count += 1
    return count


def test_sieve_small():
    assert sieve(1).primes == ()
    assert sieve(10).primes == (2, 3, 5, 7)


def test_sieve_million_matches_independent_count():
    table = sieve(10**6)
    assert len(table) == 78498
    assert len(table) == sympy.primepi(10**6)
    sample = range(999_000, 1_000_001)
    assert [x for x in sample if table.is_prime(x)] == [x for x in sample if _trial_division_is_prime(x)]


def test_sieve_cap():
    with pytest.raises(ResourceLimitError):
        sieve(101, max_limit=100)


def test_sieve_limit_env(monkeypatch):
    monkeypatch.setenv("DIOGRAPH_SIEVE_LIMIT", "50")
    with pytest.raises(ResourceLimitError):
        sieve(51)


@pytest.mark.parametrize("x, expected", [(0, 0), (1, 0), (2, 1), (6, 3), (11, 5), (100, 25)])
def test_prime_pi(x, expected):
    assert prime_pi(x) == expected


def test_prime_pi_beyond_cap(monkeypatch):
    monkeypatch.setenv("DIOGRAPH_SIEVE_LIMIT", "1000")
    with pytest.raises(ResourceLimitError):
        prime_pi(10**6 + 1)


def test_prime_pi_step_property():
    values = [prime_pi(x) for x in range(0, 5000)]
    assert all(b - a in (0, 1) for a, b in zip(values, values[1:]))
    assert all((b - a == 1) == _trial_division_is_prime(x) for x, (a, b) in enumerate(zip(values, values[1:]), 1))


def test_arithmetic_functions_examples():
    assert (omega(1), tau(1), divisors(1)) == (0, 1, [1])
    assert tau(12) == 6 and divisors(12) == [1, 2, 3, 4, 6, 12]
    assert (omega(10), tau(10)) == (2, 4)


@pytest.mark.parametrize("p, n, v", [(2, 12, 2), (3, 10, 0), (5, 50, 2)])
def test_valuation(p, n, v):
    assert valuation(p, n) == v


def test_valuation_rejects_composite():
    with pytest.raises(ValueError):
        valuation(4, 16)


@pytest.mark.parametrize("p, n, c", [(2, 12, 8), (3, 9, 27), (5, 11, 5)])
def test_critical_prime_power(p, n, c):
    assert critical_prime_power(p, n) == c


def test_critical_prime_power_overflow():
    with pytest.raises(OutOfRangeError):
        critical_prime_power(2, 2**63)


def test_gamma_examples():
    assert gamma_x(6, 12) == 2 == _gamma_oracle(6, 12)
    assert gamma_x(1, 10) == 1 == _gamma_oracle(1, 10)
    assert gamma_x(Fraction(12, 2), 12) == 2
    for p, k in [(2, 1), (2, 5), (3, 3), (7, 2), (97, 1)]:
        assert gamma_x(1, p**k) == 0


def test_gamma_threshold_checks():
    with pytest.raises(ValueError):
        gamma_x(10, 10)
    with pytest.raises(TypeError):
        gamma_x(2.5, 10)


def test_gamma_half_threshold_is_exact():
    # n = 2m: a critical power equal to m must not be counted (m < c required).
    for n in range(2, 400, 2):
        assert gamma_x(Fraction(n, 2), n) == _gamma_oracle(Fraction(n, 2), n)


@given(st.integers(min_value=1, max_value=10**4))
def test_factorization_reconstructs(n):
    fac = factorize(n)
    assert prod(p**e for p, e in fac) == n
    assert all(is_prime(p) and e >= 1 for p, e in fac)
    assert [p for p, _ in fac] == sorted({p for p, _ in fac})
    assert tau(n) == len(divisors(n))


def _critical_powers_of_n_up_to(m, n):
    return sum(1 for p, _ in factorize(n) if 1 < critical_prime_power(p, n) <= m)


@settings(max_examples=300)
@given(st.data())
def test_gamma_threshold_difference(data):
    # Moving the threshold from 1 to m drops exactly n's own critical powers in (1, m].
    n = data.draw(st.integers(min_value=2, max_value=10**4))
    m = data.draw(st.integers(min_value=1, max_value=n - 1))
    assert gamma_x(m, n) == gamma_x(1, n) - _critical_powers_of_n_up_to(m, n)
    assert gamma_x(1, n) <= omega(n)
    assert gamma_x(m, n) == _gamma_oracle(m, n)


def test_gamma_difference_with_gamma_of_m_does_not_hold():
    # Subtracting gamma_1(m) mixes in m's critical powers: 12 has 8, 9 above 6, while
    # gamma_1(12) - gamma_1(6) = 2 - 1.
    assert gamma_x(6, 12) == 2
    assert gamma_x(1, 12) - gamma_x(1, 6) == 1
