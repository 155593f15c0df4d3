"""Integer partitions: enumeration, conjugation, self-conjugacy and hook lengths."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import check_cap


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty partition ``Partition()`` is the unique partition of 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        prev = None
        for part in self:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers: {tuple(self)}")
            if prev is not None and part > prev:
                raise ValueError(f"parts must be weakly decreasing: {tuple(self)}")
            prev = part
        return self

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> Partition:
        # skips validation; only for parts produced by the enumerator
        return tuple.__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def is_self_conjugate(self) -> bool:
        return is_self_conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def enumerate_partitions(n: int, max_n: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    ``(n,)`` comes first and ``(1,)*n`` last. Raises LimitExceededError when
    ``n`` is above the enumeration cap (default 50, see ``errors.default_max_n``).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    check_cap(n, max_n)
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(iter_partitions(n))


def iter_partitions(n: int) -> Iterator[Partition]:
    """Lazily yield the partitions of ``n`` in reverse-lexicographic order (no cap)."""
    if n == 0:
        yield Partition()
        return
    # Zoghbi-Stojmenovic ZS1, 1-based work array
    x = [1] * (n + 1)
    x[1] = n
    m = h = 1
    yield Partition._trusted(x[1:2])
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield Partition._trusted(x[1 : m + 1])


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: ``lam'[j] = #{i : lam[i] > j}``."""
    if not lam:
        return Partition()
    out = []
    rows = len(lam)
    for j in range(lam[0]):
        while rows and lam[rows - 1] <= j:
            rows -= 1
        out.append(rows)
    return Partition._trusted(out)


def is_self_conjugate(lam: Partition) -> bool:
    return conjugate(lam) == lam


@lru_cache(maxsize=None)
def count_self_conjugate(n: int, max_n: int | None = None) -> int:
    """p_s(n): the number of partitions of ``n`` equal to their conjugate."""
    return sum(1 for lam in enumerate_partitions(n, max_n) if is_self_conjugate(lam))


def canonical_self_conjugate(n: int) -> Partition:
    """A fixed self-conjugate partition of ``n >= 4``.

    Odd ``n = 2l + 1`` gives the hook ``(l+1, 1^l)``; even ``n = 2k`` gives
    ``(k, 2, 1^(k-2))``.
    """
    if n < 4:
        raise ValueError(f"canonical self-conjugate witness needs n >= 4, got {n}")
    if n % 2:
        l = (n - 1) // 2
        lam = Partition((l + 1,) + (1,) * l)
    else:
        k = n // 2
        lam = Partition((k, 2) + (1,) * (k - 2))
    assert lam.n == n and is_self_conjugate(lam), lam
    return lam


def hook_lengths(lam: Partition) -> tuple[tuple[int, ...], ...]:
    """Hook length of every cell, row by row; cell (i, j) is 0-based.

    For ``(2, 2)`` this is ``((3, 2), (2, 1))``.
    """
    conj = conjugate(lam)
    return tuple(
        tuple(row - j + conj[j] - i - 1 for j in range(row))
        for i, row in enumerate(lam)
    )
