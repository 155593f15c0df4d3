from math import factorial

import pytest

from oracles import branching_degree, column_conjugate, recursive_partitions
from symdeg import (
    DegreePattern,
    alt_class_count,
    alt_degree_pattern,
    class_count,
    count_self_conjugate,
    probe_remark_conjecture,
)


def brute_alt_pattern(n):
    """Restriction rule applied to the oracle degrees, pairing via a seen-set."""
    counts, seen = {}, set()
    for lam in recursive_partitions(n):
        conj = column_conjugate(lam)
        d = branching_degree(lam)
        if conj == lam:
            counts[d // 2] = counts.get(d // 2, 0) + 2
        elif conj not in seen:
            seen.add(lam)
            counts[d] = counts.get(d, 0) + 1
    return counts


def test_alt_pattern_examples():
    a5 = alt_degree_pattern(5)
    assert a5 == DegreePattern({1: 1, 3: 2, 4: 1, 5: 1})
    assert a5.group_order == 60
    assert alt_degree_pattern(6).d(1) == 5
    assert a5.d(1) == 3
    assert alt_degree_pattern(6).cd == (1, 5, 8, 9, 10)


@pytest.mark.parametrize("n", range(2, 13))
def test_alt_pattern_matches_oracle(n):
    assert dict(alt_degree_pattern(n).entries) == brute_alt_pattern(n)


@pytest.mark.parametrize("n", range(2, 41))
def test_alt_invariants(n):
    pattern = alt_degree_pattern(n)
    assert 2 * pattern.group_order == factorial(n)
    assert pattern.class_count == alt_class_count(n)
    assert 2 * alt_class_count(n) - 3 * count_self_conjugate(n) == class_count(n)
    if n >= 5:
        assert 2 * alt_class_count(n) > class_count(n)


def test_alt_class_count_examples():
    assert alt_class_count(5) == 5
    assert alt_class_count(8) == 14
    assert class_count(12) == 2 * alt_class_count(12) - 3 * count_self_conjugate(12)


@pytest.mark.parametrize(
    "n, partition, degree",
    [(5, (3, 1, 1), 6), (6, (3, 2, 1), 16), (7, (4, 1, 1, 1), 20)],
)
def test_probe_remark(n, partition, degree):
    probe = probe_remark_conjecture(n)
    assert probe.partition == partition
    assert probe.degree == degree
    # frozen from the two brute-force patterns
    sym = set(brute_degree_set(n))
    alt = set(brute_alt_pattern(n))
    assert probe.half_in_alt_only == (degree // 2 in alt and degree // 2 not in sym)
    assert probe.full_in_sym_only == (degree in sym and degree not in alt)


def brute_degree_set(n):
    return {branching_degree(lam) for lam in recursive_partitions(n)}


def test_probe_returns_data_for_range():
    for n in range(5, 25):
        probe = probe_remark_conjecture(n)
        assert isinstance(probe.half_in_alt_only, bool)
        assert probe.degree % 2 == 0
