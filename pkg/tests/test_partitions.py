import pytest
from hypothesis import given, strategies as st

from oracles import column_conjugate, distinct_odd_part_count, pentagonal_partition_counts, recursive_partitions
from symdeg import (
    LimitExceededError,
    Partition,
    canonical_self_conjugate,
    conjugate,
    count_self_conjugate,
    enumerate_partitions,
    hook_lengths,
    is_self_conjugate,
)

P = pentagonal_partition_counts(55)


def test_partition_validation():
    assert Partition() == ()
    assert Partition((3, 1, 1)).n == 5
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_enumerate_small():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(enumerate_partitions(8)) == 22


@pytest.mark.parametrize("n", range(0, 41))
def test_enumeration_counts_and_order(n):
    parts = enumerate_partitions(n)
    assert len(parts) == P[n]
    assert len(set(parts)) == len(parts)
    assert all(sum(lam) == n for lam in parts)
    # reverse lexicographic, same sequence as the plain recursion
    assert parts == sorted(parts, reverse=True)
    if n <= 20:
        assert parts == recursive_partitions(n)


def test_enumeration_cap():
    assert len(enumerate_partitions(50)) == 204226
    with pytest.raises(LimitExceededError):
        enumerate_partitions(51)
    assert len(enumerate_partitions(52, max_n=52)) == P[52]


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("SYMDEG_MAX_N", "10")
    with pytest.raises(LimitExceededError):
        enumerate_partitions(11)
    assert len(enumerate_partitions(10)) == 42


@pytest.mark.parametrize(
    "lam, expected",
    [((3,), (1, 1, 1)), ((3, 1, 1), (3, 1, 1)), ((4, 2, 1, 1), (4, 2, 1, 1)), ((4, 1), (2, 1, 1, 1)), ((), ())],
)
def test_conjugate_examples(lam, expected):
    assert conjugate(Partition(lam)) == expected


@pytest.mark.parametrize("n", range(0, 41))
def test_conjugate_is_involution(n):
    for lam in enumerate_partitions(n):
        assert conjugate(conjugate(lam)) == lam
        if n <= 15:
            assert conjugate(lam) == column_conjugate(lam)


def test_is_self_conjugate():
    assert is_self_conjugate(Partition((2, 2)))
    assert not is_self_conjugate(Partition((4, 1)))
    assert is_self_conjugate(Partition())


def test_count_self_conjugate_examples():
    assert count_self_conjugate(5) == 1
    assert count_self_conjugate(8) == 2
    selfconj8 = [lam for lam in enumerate_partitions(8) if is_self_conjugate(lam)]
    assert selfconj8 == [(4, 2, 1, 1), (3, 3, 2)]


@pytest.mark.parametrize("n", range(0, 41))
def test_count_self_conjugate_matches_distinct_odd_parts(n):
    assert count_self_conjugate(n) == distinct_odd_part_count(n)
    if n >= 5:
        assert count_self_conjugate(n) >= 1


def test_canonical_self_conjugate_examples():
    assert canonical_self_conjugate(5) == (3, 1, 1)
    assert canonical_self_conjugate(8) == (4, 2, 1, 1)
    assert canonical_self_conjugate(7) == (4, 1, 1, 1)
    assert column_conjugate((4, 1, 1, 1)) == (4, 1, 1, 1)
    with pytest.raises(ValueError):
        canonical_self_conjugate(3)


@pytest.mark.parametrize("n", range(4, 61))
def test_canonical_self_conjugate_range(n):
    lam = canonical_self_conjugate(n)
    assert sum(lam) == n
    assert is_self_conjugate(lam)


def test_hook_lengths_examples():
    assert hook_lengths(Partition((1,))) == ((1,),)
    assert sorted(h for row in hook_lengths(Partition((2, 2))) for h in row) == [1, 2, 2, 3]
    assert hook_lengths(Partition((4,))) == ((4, 3, 2, 1),)


partitions_strategy = st.lists(st.integers(1, 12), max_size=10).map(lambda xs: Partition(sorted(xs, reverse=True)))


@given(partitions_strategy)
def test_hooks_by_arm_and_leg(lam):
    # hook = arm + leg + 1, counted cell by cell
    hooks = hook_lengths(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for k in range(i + 1, len(lam)) if lam[k] > j)
            assert hooks[i][j] == arm + leg + 1


@given(partitions_strategy)
def test_conjugate_property(lam):
    assert conjugate(lam) == column_conjugate(lam)
    assert sum(conjugate(lam)) == sum(lam)
