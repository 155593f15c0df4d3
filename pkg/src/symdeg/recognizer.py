"""Decide whether a degree pattern is X_1(S_n), with proof-replay diagnostics.

A finite group with the same character degree multiset as S_n is isomorphic
to S_n, so recognition reduces to exact multiset comparison. The staged
checks below fail fast on garbage input: the unit multiplicity and the
factorial order are checked before any enumeration happens.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alt_degrees import alt_class_count, alt_degree_pattern
from .errors import check_cap
from .numtheory import factorial_inverse, prime_factors
from .partitions import count_self_conjugate
from .pattern import DegreePattern
from .sym_degrees import cd, class_count, degree_pattern

ACCEPTED = "accepted"
REJECTED = "rejected"

UNIT_MULTIPLICITY = "unit-multiplicity"
ORDER_NOT_FACTORIAL = "order-not-factorial"
PATTERN_MISMATCH = "pattern-mismatch"


@dataclass(frozen=True)
class Mismatch:
    degree: int
    given: int
    expected: int


@dataclass
class SubsetReport:
    n: int
    missing_degrees: list[int] = field(default_factory=list)
    first_monotonicity_violation: tuple[int, int, int] | None = None  # (i, d_i(D), d_i(S_n))

    @property
    def ok(self) -> bool:
        return not self.missing_degrees and self.first_monotonicity_violation is None

    @property
    def first_missing(self) -> int | None:
        return self.missing_degrees[0] if self.missing_degrees else None


@dataclass
class RecognitionReport:
    verdict: str
    n: int | None = None
    stage: str | None = None
    witness: Mismatch | None = None
    order: int = 0
    class_count: int = 0
    unit_multiplicity: int = 0
    diagnostics: dict = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPTED

    def to_text(self) -> str:
        if self.accepted:
            return f"accepted n={self.n}"
        lines = [f"rejected at {self.stage}"]
        if self.stage == UNIT_MULTIPLICITY:
            lines.append(f"  degree 1 occurs {self.unit_multiplicity} times; S_n (n >= 2) has exactly 2 linear characters")
        elif self.stage == ORDER_NOT_FACTORIAL:
            lines.append(f"  sum of squared degrees {self.order} is not a factorial")
        elif self.witness is not None:
            w = self.witness
            lines.append(f"  implied n={self.n} (order {self.order} = {self.n}!)")
            lines.append(f"  first difference at degree {w.degree}: multiplicity {w.given}, S_{self.n} has {w.expected}")
        for key, value in self.diagnostics.items():
            lines.append(f"  {key}: {value}")
        return "\n".join(lines)

    def to_machine(self) -> str:
        """One tab-separated ``key=value`` line; the field order is fixed."""
        w = self.witness
        fields = [
            ("verdict", self.verdict),
            ("n", self.n),
            ("stage", self.stage),
            ("degree", w.degree if w else None),
            ("given", w.given if w else None),
            ("expected", w.expected if w else None),
            ("order", self.order),
            ("classes", self.class_count),
        ]
        return "\t".join(f"{k}={'-' if v is None else v}" for k, v in fields)


def first_difference(given: DegreePattern, expected: DegreePattern) -> Mismatch | None:
    """Smallest degree whose multiplicities differ."""
    for degree in sorted(set(given.entries) | set(expected.entries)):
        a, b = given.multiplicity(degree), expected.multiplicity(degree)
        if a != b:
            return Mismatch(degree, a, b)
    return None


def recognize(pattern: DegreePattern, max_n: int | None = None, diagnostics: bool = False) -> RecognitionReport:
    """Accept iff ``pattern`` equals X_1(S_n) for some n.

    Raises LimitExceededError when the implied n is above the enumeration
    cap; that is not a rejection.
    """
    if len(pattern) == 0:
        raise ValueError("empty degree pattern")
    report = RecognitionReport(
        REJECTED,
        order=pattern.group_order,
        class_count=pattern.class_count,
        unit_multiplicity=pattern.multiplicity(1),
    )
    # S_1 = {1:1} and S_2 = {1:2} are the only patterns with no nonlinear degree
    if dict(pattern.entries) == {1: 1}:
        report.verdict, report.n = ACCEPTED, 1
        return report
    if report.unit_multiplicity != 2:
        report.stage = UNIT_MULTIPLICITY
        return report
    n = factorial_inverse(report.order)
    if n is None:
        report.stage = ORDER_NOT_FACTORIAL
        return report
    report.n = n
    check_cap(n, max_n)
    expected = degree_pattern(n, max_n)
    witness = first_difference(pattern, expected)
    if witness is None:
        report.verdict = ACCEPTED
        return report
    report.stage, report.witness = PATTERN_MISMATCH, witness
    if diagnostics:
        sub = subset_diagnostic(pattern, n, max_n)
        report.diagnostics["class count"] = f"{pattern.class_count} vs k(S_{n})={expected.class_count}"
        report.diagnostics["cd subset"] = "holds" if not sub.missing_degrees else f"fails at {sub.first_missing}"
        if sub.first_monotonicity_violation:
            i, a, b = sub.first_monotonicity_violation
            report.diagnostics["d_i monotonicity"] = f"d_{i}={a} < d_{i}(S_{n})={b}"
    return report


def subset_diagnostic(pattern: DegreePattern, n: int, max_n: int | None = None) -> SubsetReport:
    """Check cd(D) <= cd(S_n) and its consequence d_i(D) >= d_i(S_n)."""
    target = cd(n, max_n)
    target_set = set(target)
    report = SubsetReport(n)
    report.missing_degrees = [d for d in pattern.cd if d not in target_set]
    mine = [d for d in pattern.cd if d > 1]
    theirs = [d for d in target if d > 1]
    for i, (a, b) in enumerate(zip(mine, theirs), 1):
        if a < b:
            report.first_monotonicity_violation = (i, a, b)
            break
    return report


@dataclass
class WreathReport:
    n: int
    violations: list[tuple[str, int, int]] = field(default_factory=list)  # (kind, a or r, offending value)

    @property
    def ok(self) -> bool:
        return not self.violations


def wreath_constraint_check(cd_s: set[int] | list[int], n: int, max_n: int | None = None) -> WreathReport:
    """For G with G' = S x S of index 2: every a in cd(S)-{1} needs 2a, a^2 in cd(S_n).

    Also every prime r dividing some such a has r^2 | n!, i.e. n >= 2r.
    """
    degrees = sorted(set(cd_s))
    if 1 not in degrees or len(degrees) < 2:
        raise ValueError("cd(S) must contain 1 and at least one nontrivial degree")
    target = set(cd(n, max_n))
    report = WreathReport(n)
    primes: set[int] = set()
    for a in degrees[1:]:
        if 2 * a not in target:
            report.violations.append(("double-missing", a, 2 * a))
        if a * a not in target:
            report.violations.append(("square-missing", a, a * a))
        primes |= prime_factors(a)
    for r in sorted(primes):
        if n < 2 * r:
            report.violations.append(("prime-square", r, r * r))
    return report


@dataclass(frozen=True)
class SeparationReport:
    n: int
    k_sym: int
    k_alt_doubled: int
    gap: int
    identity_holds: bool
    same_order: bool
    same_cd: bool

    @property
    def ok(self) -> bool:
        return self.identity_holds and self.gap >= 3 and self.k_sym < self.k_alt_doubled


def alt_double_separation(n: int, max_n: int | None = None) -> SeparationReport:
    """Compare S_n with A_n x Z_2: equal orders, but class counts differ by 3 p_s(n)."""
    if n < 5:
        raise ValueError(f"separation needs n >= 5, got {n}")
    k_sym = class_count(n, max_n)
    k_alt = alt_class_count(n, max_n)
    ps = count_self_conjugate(n, max_n)
    doubled = alt_degree_pattern(n, max_n).scaled(2)
    sym = degree_pattern(n, max_n)
    report = SeparationReport(
        n=n,
        k_sym=k_sym,
        k_alt_doubled=2 * k_alt,
        gap=2 * k_alt - k_sym,
        identity_holds=k_sym == 2 * k_alt - 3 * ps,
        same_order=doubled.group_order == sym.group_order,
        same_cd=doubled.cd == sym.cd,
    )
    assert report.gap == 3 * ps, report
    return report


def a6_extension_facts(n_max: int = 12, max_n: int | None = None) -> dict[str, list[int]]:
    """Which S_n (5 <= n <= n_max) contain the degree pairs that separate the A_6 extensions.

    PGL_2(9) has degrees 8 and 9, while M_10 and A_6.2^2 have 9 and 16. The
    prime-power classification allows {8, 9} in no cd(S_n) and {9, 16} only
    for n = 6.
    """
    facts: dict[str, list[int]] = {"{8,9}": [], "{9,16}": []}
    for n in range(5, n_max + 1):
        degrees = set(cd(n, max_n))
        if {8, 9} <= degrees:
            facts["{8,9}"].append(n)
        if {9, 16} <= degrees:
            facts["{9,16}"].append(n)
    return facts
