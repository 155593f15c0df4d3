"""Exact integer utilities: sieving, prime powers, factorial inversion."""

from __future__ import annotations

import threading
from bisect import bisect_right
from math import isqrt
from typing import NamedTuple

_sieve_lock = threading.Lock()
_sieve_limit = 1
_sieve_primes: tuple[int, ...] = ()

# Miller-Rabin with these bases is deterministic below 3.317e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


class PrimePowerDecomposition(NamedTuple):
    p: int
    d: int

    @property
    def value(self) -> int:
        return self.p**self.d


def primes_up_to(n: int) -> list[int]:
    """Ascending list of primes ``<= n`` (empty for ``n < 2``)."""
    if n < 2:
        return []
    primes = _primes_through(n)
    return list(primes[: bisect_right(primes, n)])


def _primes_through(n: int) -> tuple[int, ...]:
    global _sieve_limit, _sieve_primes
    if n <= _sieve_limit:
        return _sieve_primes
    with _sieve_lock:
        if n > _sieve_limit:
            limit = max(n, 2 * _sieve_limit, 1024)
            _sieve_primes = _eratosthenes(limit)
            _sieve_limit = limit
        return _sieve_primes


def _eratosthenes(limit: int) -> tuple[int, ...]:
    marks = bytearray([1]) * (limit + 1)
    marks[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if marks[p]:
            marks[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(marks) if flag)


def is_prime(x: int) -> bool:
    """Primality by strong Miller-Rabin on a fixed base set.

    Exact for ``x < 3.3e24``; above that it is a strong probable-prime test.
    """
    if x < 2:
        return False
    for p in _MR_BASES:
        if x % p == 0:
            return x == p
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        y = pow(a, d, x)
        if y in (1, x - 1):
            continue
        for _ in range(s - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def integer_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) for ``x >= 0``, by bisection on exact integers."""
    if x < 0 or k < 1:
        raise ValueError("integer_root needs x >= 0 and k >= 1")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return isqrt(x)
    lo, hi = 1, 1 << (x.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def prime_power_decompose(x: int) -> PrimePowerDecomposition | None:
    """``(p, d)`` with ``x == p**d`` and p prime, or None.

    >>> prime_power_decompose(64)
    PrimePowerDecomposition(p=2, d=6)
    >>> prime_power_decompose(12) is None
    True
    """
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    # small prime factors first: the first one found decides everything
    for p in _primes_through(1024):
        if p * p > x:
            break
        if x % p == 0:
            d = 0
            while x % p == 0:
                x //= p
                d += 1
            return PrimePowerDecomposition(p, d) if x == 1 else None
    # no factor below 1024: x = r^d forces r > 1024, so d <= log_1024(x)
    for d in range(x.bit_length() // 10 + 1, 0, -1):
        r = integer_root(x, d)
        if r > 1 and r**d == x and is_prime(r):
            return PrimePowerDecomposition(r, d)
    return None


def largest_prime_divisor(x: int) -> int:
    """Largest prime dividing ``x >= 2`` (trial division by sieved primes)."""
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    largest = 1
    for p in _primes_through(max(2, isqrt(x))):
        if p * p > x:
            break
        if x % p == 0:
            largest = p
            while x % p == 0:
                x //= p
    return max(largest, x) if x > 1 else largest


def prime_factors(x: int, candidates: list[int] | None = None) -> set[int]:
    """Distinct prime divisors of ``x``.

    With ``candidates`` only those primes are tried, and any cofactor left
    over is returned as-is (callers use this to detect out-of-range factors).
    """
    found = set()
    primes = candidates if candidates is not None else _primes_through(max(2, isqrt(x)))
    for p in primes:
        if candidates is None and p * p > x:
            break
        if x % p == 0:
            found.add(p)
            while x % p == 0:
                x //= p
    if x > 1:
        found.add(x)
    return found


def factorial_inverse(N: int) -> int | None:
    """n with n! == N, or None. ``factorial_inverse(1) == 1`` by convention."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    n, f = 1, 1
    while f < N:
        n += 1
        f *= n
    return n if f == N else None


def bertrand_prime(m: int) -> int:
    """Largest prime p with ``m/2 < p <= m`` (exists for every m >= 15)."""
    if m < 15:
        raise ValueError(f"bertrand_prime needs m >= 15, got {m}")
    primes = _primes_through(m)
    p = primes[bisect_right(primes, m) - 1]
    if 2 * p <= m:
        raise ArithmeticError(f"no prime in ({m}/2, {m}]")
    return p
