"""Independent brute-force oracles. Nothing here imports symdeg."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial


def pentagonal_partition_counts(limit: int) -> list[int]:
    """p(0..limit) via Euler's pentagonal number recurrence."""
    p = [0] * (limit + 1)
    p[0] = 1
    for n in range(1, limit + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def recursive_partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of n by plain recursion on the largest part."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in recursive_partitions(n - first, first):
            out.append((first,) + rest)
    return out


def distinct_odd_part_count(n: int) -> int:
    """Number of partitions of n into distinct odd parts, by subset recursion."""

    @lru_cache(maxsize=None)
    def count(remaining: int, smallest: int) -> int:
        if remaining == 0:
            return 1
        return sum(count(remaining - part, part + 2) for part in range(smallest, remaining + 1, 2))

    return count(n, 1)


def column_conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate by drawing the diagram as a set of cells and reading columns."""
    cells = {(i, j) for i, row in enumerate(parts) for j in range(row)}
    cols = []
    j = 0
    while any((i, j) in cells for i in range(len(parts))):
        cols.append(sum(1 for i in range(len(parts)) if (i, j) in cells))
        j += 1
    return tuple(cols)


@lru_cache(maxsize=None)
def branching_degree(parts: tuple[int, ...]) -> int:
    """f^lambda by the branching rule: sum over removable corners (standard tableaux count)."""
    if sum(parts) <= 1:
        return 1
    total = 0
    for i, row in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if row > below:
            smaller = list(parts)
            smaller[i] -= 1
            total += branching_degree(tuple(x for x in smaller if x))
    return total


def brute_degree_multiset(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for lam in recursive_partitions(n):
        d = branching_degree(lam)
        out[d] = out.get(d, 0) + 1
    return out


def trial_factor(x: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= x:
        while x % p == 0:
            factors[p] = factors.get(p, 0) + 1
            x //= p
        p += 1
    if x > 1:
        factors[x] = factors.get(x, 0) + 1
    return factors


def naive_is_prime(x: int) -> bool:
    return x >= 2 and all(x % d for d in range(2, int(x**0.5) + 1))


def mobius(n: int) -> int:
    f = trial_factor(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def cyclotomic_mobius(k: int, q: int) -> int:
    """Phi_k(q) = prod_{d | k} (q^d - 1)^mu(k/d)."""
    value = Fraction(1)
    for d in range(1, k + 1):
        if k % d == 0:
            mu = mobius(k // d)
            if mu:
                value *= Fraction(q**d - 1) ** mu
    assert value.denominator == 1
    return int(value)


def n_factorial(n: int) -> int:
    return factorial(n)
