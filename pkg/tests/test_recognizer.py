import pytest
from hypothesis import given, strategies as st

from symdeg import (
    DegreePattern,
    LimitExceededError,
    alt_degree_pattern,
    alt_double_separation,
    count_self_conjugate,
    degree_pattern,
    recognize,
    subset_diagnostic,
    wreath_constraint_check,
)
from symdeg.recognizer import (
    ORDER_NOT_FACTORIAL,
    PATTERN_MISMATCH,
    UNIT_MULTIPLICITY,
    a6_extension_facts,
    first_difference,
)


def single_mutations(pattern):
    """Remove an entry, change a multiplicity by one, or move a degree d to d + 1."""
    entries = dict(pattern.entries)
    for d, m in entries.items():
        removed = {k: v for k, v in entries.items() if k != d}
        if removed:
            yield ("remove", d), removed
        yield ("increment", d), {**entries, d: m + 1}
        if m > 1:
            yield ("decrement", d), {**entries, d: m - 1}
        shifted = dict(removed)
        shifted[d + 1] = shifted.get(d + 1, 0) + m
        yield ("shift", d), shifted


@pytest.mark.parametrize("n", range(1, 26))
def test_accepts_symmetric_patterns(n):
    report = recognize(degree_pattern(n))
    assert report.accepted and report.n == n
    assert report.to_text() == f"accepted n={n}"


@pytest.mark.parametrize("n", range(5, 13))
def test_rejects_every_single_mutation(n):
    count = 0
    for label, entries in single_mutations(degree_pattern(n)):
        report = recognize(DegreePattern(entries))
        assert not report.accepted, (n, label)
        count += 1
    assert count >= 3 * len(degree_pattern(n))


@given(st.integers(5, 12), st.data())
def test_random_mutation_rejected(n, data):
    mutations = list(single_mutations(degree_pattern(n)))
    _, entries = data.draw(st.sampled_from(mutations))
    assert not recognize(DegreePattern(entries)).accepted


@pytest.mark.parametrize("n", range(5, 16))
def test_alt_times_z2_rejected_with_witness(n):
    fake = alt_degree_pattern(n).scaled(2)
    assert fake.group_order == degree_pattern(n).group_order
    report = recognize(fake)
    assert not report.accepted
    assert report.stage == PATTERN_MISMATCH and report.n == n
    w = report.witness
    assert w is not None and fake.multiplicity(w.degree) == w.given
    assert degree_pattern(n).multiplicity(w.degree) == w.expected
    assert w.given != w.expected


def test_a5_times_z2_witness():
    report = recognize(alt_degree_pattern(5).scaled(2))
    assert (report.witness.degree, report.witness.given, report.witness.expected) == (3, 4, 0)


def test_stage_order():
    assert recognize(DegreePattern({1: 3, 2: 1})).stage == UNIT_MULTIPLICITY
    assert recognize(DegreePattern({1: 2, 3: 1})).stage == ORDER_NOT_FACTORIAL
    # order 24 = 4! but the wrong shape
    assert recognize(DegreePattern({1: 2, 2: 1, 3: 1, 4: 1})).stage == ORDER_NOT_FACTORIAL
    r = recognize(DegreePattern({1: 2, 2: 1, 3: 2}))
    assert r.accepted and r.n == 4


def test_s2_and_s1():
    assert recognize(DegreePattern({1: 1})).n == 1
    assert recognize(DegreePattern({1: 2})).n == 2


def test_cap_raises_instead_of_rejecting():
    with pytest.raises(LimitExceededError):
        recognize(degree_pattern(12), max_n=11)


def test_huge_factorial_order_is_cheap():
    # order 60!, implied n above the cap: the limit error comes before any enumeration
    from math import factorial

    fake = DegreePattern({1: 2, 2: (factorial(60) - 20) // 4, 3: 2})
    assert fake.group_order == factorial(60)
    with pytest.raises(LimitExceededError):
        recognize(fake)


def test_machine_format():
    line = recognize(alt_degree_pattern(6).scaled(2)).to_machine()
    keys = [field.split("=")[0] for field in line.split("\t")]
    assert keys == ["verdict", "n", "stage", "degree", "given", "expected", "order", "classes"]
    assert line.startswith("verdict=rejected\tn=6\tstage=pattern-mismatch")
    ok = recognize(degree_pattern(6)).to_machine()
    assert ok == "verdict=accepted\tn=6\tstage=-\tdegree=-\tgiven=-\texpected=-\torder=720\tclasses=11"


def test_diagnostics_text():
    report = recognize(alt_degree_pattern(6).scaled(2), diagnostics=True)
    text = report.to_text()
    assert "rejected at pattern-mismatch" in text
    assert "class count" in report.diagnostics
    assert "cd subset" in report.diagnostics


def test_first_difference():
    assert first_difference(degree_pattern(5), degree_pattern(5)) is None
    m = first_difference(DegreePattern({1: 2, 4: 1}), degree_pattern(5))
    assert (m.degree, m.given, m.expected) == (4, 1, 2)


def test_subset_diagnostic_examples():
    a6 = alt_degree_pattern(6)
    report = subset_diagnostic(a6, 6)
    assert report.first_missing == 8
    s8 = subset_diagnostic(degree_pattern(8), 9)
    assert s8.first_monotonicity_violation == (1, 7, 8)
    assert subset_diagnostic(degree_pattern(9), 9).ok


def test_wreath_constraint_examples():
    # S = A_5, cd = {1, 3, 4, 5}: needs 6, 9, 8, 16, 10, 25 in cd(S_n)
    report = wreath_constraint_check({1, 3, 4, 5}, 8)
    kinds = {v[0] for v in report.violations}
    assert "prime-square" in kinds  # 5^2 does not divide 8!
    assert ("square-missing", 3, 9) in report.violations
    assert not report.ok
    with pytest.raises(ValueError):
        wreath_constraint_check({1}, 8)


@pytest.mark.parametrize("n", range(5, 41))
def test_separation_gap(n):
    report = alt_double_separation(n)
    assert report.gap == 3 * count_self_conjugate(n)
    assert report.identity_holds and report.same_order and report.ok


def test_separation_rejects_small_n():
    with pytest.raises(ValueError):
        alt_double_separation(4)


def test_a6_extension_facts():
    facts = a6_extension_facts(12)
    assert facts == {"{8,9}": [], "{9,16}": [6]}
