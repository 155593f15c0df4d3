"""Character degrees of the symmetric group via the hook-length formula."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod

from .errors import check_cap
from .numtheory import PrimePowerDecomposition, prime_factors, prime_power_decompose, primes_up_to
from .partitions import Partition, enumerate_partitions, hook_lengths
from .pattern import DegreePattern

# (n, degree) pairs where S_n has a prime-power degree other than n - 1
EXCEPTIONAL_PRIME_POWER_DEGREES = frozenset({(4, 2), (5, 5), (6, 9), (6, 16), (8, 64), (9, 27)})


def chi_degree(lam: Partition) -> int:
    """Degree of the irreducible character of S_n labelled by ``lam``: n! / prod(hooks)."""
    n = sum(lam)
    if n < 1:
        raise ValueError("chi_degree needs a partition of n >= 1")
    denominator = prod(h for row in hook_lengths(lam) for h in row)
    degree, rem = divmod(factorial(n), denominator)
    assert rem == 0, (lam, denominator)
    return degree


def degree_pattern(n: int, max_n: int | None = None) -> DegreePattern:
    """X_1(S_n): the multiset of all irreducible character degrees of S_n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    check_cap(n, max_n)
    return _degree_pattern(n)


@lru_cache(maxsize=None)
def _degree_pattern(n: int) -> DegreePattern:
    return DegreePattern.from_degrees(chi_degree(lam) for lam in enumerate_partitions(n, max_n=n))


def cd(n: int, max_n: int | None = None) -> tuple[int, ...]:
    """Distinct degrees of S_n in ascending order (``cd(n)[0] == 1``)."""
    return degree_pattern(n, max_n).cd


def d_index(n: int, i: int, max_n: int | None = None) -> int:
    """d_i(S_n), the i-th smallest nontrivial degree."""
    return degree_pattern(n, max_n).d(i)


def class_count(n: int, max_n: int | None = None) -> int:
    """k(S_n), which equals the partition count p(n)."""
    return len(enumerate_partitions(n, max_n))


def rho(n: int, max_n: int | None = None) -> set[int]:
    """Primes dividing at least one degree of S_n.

    Degrees are factored over the primes up to n; a cofactor that survives
    (impossible for a true divisor of n!) is kept so it shows up in checks.
    """
    candidates = primes_up_to(n)
    primes: set[int] = set()
    for degree in cd(n, max_n):
        if degree > 1:
            primes |= prime_factors(degree, candidates)
    return primes


@dataclass
class PrimePowerReport:
    n: int
    found: dict[int, PrimePowerDecomposition] = field(default_factory=dict)
    violations: list[int] = field(default_factory=list)
    missing: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.missing


def verify_prime_power_classification(n: int, max_n: int | None = None) -> PrimePowerReport:
    """Check every nontrivial prime-power degree of S_n against the known list.

    Allowed: ``n - 1`` (whenever it is a prime power) and the exceptional pairs
    in ``EXCEPTIONAL_PRIME_POWER_DEGREES``. Anything else is a violation; a
    listed case that fails to appear is reported as missing.
    """
    if n < 5:
        raise ValueError(f"classification check needs n >= 5, got {n}")
    report = PrimePowerReport(n)
    for degree in cd(n, max_n):
        if degree == 1:
            continue
        decomposition = prime_power_decompose(degree)
        if decomposition is None:
            continue
        report.found[degree] = decomposition
        if degree != n - 1 and (n, degree) not in EXCEPTIONAL_PRIME_POWER_DEGREES:
            report.violations.append(degree)

    expected = {deg for m, deg in EXCEPTIONAL_PRIME_POWER_DEGREES if m == n}
    if prime_power_decompose(n - 1) is not None:
        expected.add(n - 1)
    report.missing = sorted(expected - set(report.found))
    return report
