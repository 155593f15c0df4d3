from math import factorial

import pytest

from oracles import branching_degree, brute_degree_multiset, recursive_partitions
from symdeg import (
    DegreePattern,
    DegreeIndexError,
    Partition,
    cd,
    chi_degree,
    class_count,
    conjugate,
    d_index,
    degree_pattern,
    enumerate_partitions,
    primes_up_to,
    rho,
    verify_prime_power_classification,
)


def test_chi_degree_examples():
    assert chi_degree(Partition((9, 1))) == 9
    assert chi_degree(Partition((7,))) == 1
    assert chi_degree(Partition((2, 2))) == 2


@pytest.mark.parametrize("n", range(1, 16))
def test_chi_degree_matches_branching_rule(n):
    for lam in recursive_partitions(n):
        assert chi_degree(Partition(lam)) == branching_degree(lam)


def test_degree_pattern_examples():
    assert degree_pattern(3) == DegreePattern({1: 2, 2: 1})
    p5 = degree_pattern(5)
    assert p5 == DegreePattern({1: 2, 4: 2, 5: 2, 6: 1})
    assert p5.group_order == 120
    assert {5, 9, 10, 16} <= set(cd(6))
    # frozen from the branching-rule oracle
    assert degree_pattern(6).entries == {1: 2, 5: 4, 9: 2, 10: 2, 16: 1}


@pytest.mark.parametrize("n", range(1, 13))
def test_degree_pattern_matches_oracle(n):
    assert dict(degree_pattern(n).entries) == brute_degree_multiset(n)


def test_cd_and_d_index():
    assert cd(5) == (1, 4, 5, 6)
    assert d_index(8, 2) == 14
    assert d_index(20, 1) == 19
    with pytest.raises(DegreeIndexError):
        d_index(5, 4)
    with pytest.raises(DegreeIndexError):
        d_index(5, 0)


@pytest.mark.parametrize("n, k", [(5, 7), (1, 1), (8, 22)])
def test_class_count(n, k):
    assert class_count(n) == k
    assert degree_pattern(n).class_count == k


@pytest.mark.parametrize("n", range(1, 41))
def test_pattern_invariants(n):
    pattern = degree_pattern(n)
    order = factorial(n)
    assert pattern.group_order == order
    assert all(order % d == 0 for d in pattern.cd)
    assert pattern.class_count == class_count(n)
    if n >= 2:
        assert pattern.multiplicity(1) == 2


@pytest.mark.parametrize("n", range(1, 31))
def test_conjugate_partitions_share_degree(n):
    for lam in enumerate_partitions(n):
        assert chi_degree(lam) == chi_degree(conjugate(lam))


def test_rho_examples():
    assert rho(5) == {2, 3, 5}
    assert rho(7) == {2, 3, 5, 7}
    assert rho(31) == set(primes_up_to(31))


@pytest.mark.parametrize("n", range(5, 41))
def test_rho_is_all_primes_up_to_n(n):
    assert rho(n) == set(primes_up_to(n))


def test_prime_power_examples():
    r9 = verify_prime_power_classification(9)
    assert 27 in r9.found and r9.ok
    r8 = verify_prime_power_classification(8)
    assert 64 in r8.found and r8.ok
    r12 = verify_prime_power_classification(12)
    assert sorted(r12.found) == [11] and r12.ok
    r6 = verify_prime_power_classification(6)
    assert sorted(r6.found) == [5, 9, 16]


@pytest.mark.parametrize("n", range(5, 41))
def test_prime_power_classification_clean(n):
    report = verify_prime_power_classification(n)
    assert report.violations == [] and report.missing == []


def test_pattern_memoized():
    assert degree_pattern(20) is degree_pattern(20)
