"""Character degrees and class counts of the alternating group.

Restriction from S_n: a pair ``{lam, lam'}`` with ``lam != lam'`` restricts to a
single irreducible of A_n, while a self-conjugate ``lam`` splits into two
irreducibles of half the degree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import check_cap
from .partitions import Partition, canonical_self_conjugate, conjugate, count_self_conjugate, enumerate_partitions
from .pattern import DegreePattern
from .sym_degrees import cd, chi_degree, class_count


def alt_degree_pattern(n: int, max_n: int | None = None) -> DegreePattern:
    """X_1(A_n) for ``n >= 2``."""
    if n < 2:
        raise ValueError(f"alt_degree_pattern needs n >= 2, got {n}")
    check_cap(n, max_n)
    return _alt_degree_pattern(n)


@lru_cache(maxsize=None)
def _alt_degree_pattern(n: int) -> DegreePattern:
    counts: Counter[int] = Counter()
    for lam in enumerate_partitions(n, max_n=n):
        conj = conjugate(lam)
        if conj == lam:
            degree = chi_degree(lam)
            if degree % 2:
                raise ArithmeticError(f"self-conjugate {lam} has odd degree {degree}")
            counts[degree // 2] += 2
        elif lam < conj:
            # one representative per conjugate pair: the lexicographically smaller
            counts[chi_degree(lam)] += 1
    return DegreePattern(counts)


def alt_class_count(n: int, max_n: int | None = None) -> int:
    """k(A_n) = (k(S_n) - p_s(n)) / 2 + 2 p_s(n)."""
    if n < 2:
        raise ValueError(f"alt_class_count needs n >= 2, got {n}")
    k_sym = class_count(n, max_n)
    ps = count_self_conjugate(n, max_n)
    half, odd = divmod(k_sym - ps, 2)
    if odd:
        raise ArithmeticError(f"k(S_{n}) - p_s({n}) = {k_sym - ps} is odd")
    return half + 2 * ps


@dataclass(frozen=True)
class RemarkProbe:
    """Membership findings for the canonical self-conjugate witness.

    This records data about an open conjecture; neither flag is expected to be
    true or false.
    """

    n: int
    partition: Partition
    degree: int
    half_in_alt_only: bool
    full_in_sym_only: bool


def probe_remark_conjecture(n: int, max_n: int | None = None) -> RemarkProbe:
    """Test ``chi(1)/2 in cd(A_n) - cd(S_n)`` and ``chi(1) in cd(S_n) - cd(A_n)``."""
    if n < 5:
        raise ValueError(f"probe needs n >= 5, got {n}")
    lam = canonical_self_conjugate(n)
    degree = chi_degree(lam)
    cd_sym = set(cd(n, max_n))
    cd_alt = set(alt_degree_pattern(n, max_n).cd)
    half = degree // 2
    return RemarkProbe(
        n=n,
        partition=lam,
        degree=degree,
        half_in_alt_only=half in cd_alt and half not in cd_sym,
        full_in_sym_only=degree in cd_sym and degree not in cd_alt,
    )
