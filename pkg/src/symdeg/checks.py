"""Batch verification suites behind ``symdeg verify``."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from .alt_degrees import alt_class_count, alt_degree_pattern
from .lie_degrees import parameter_grid, steinberg_degree, subunipotent_degree
from .numtheory import primes_up_to
from .partitions import count_self_conjugate
from .rasala import FORMS, rasala_value
from .sym_degrees import class_count, d_index, degree_pattern, rho, verify_prime_power_classification


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checks, {len(self.failures)} violations"


def check_patterns(max_n: int = 40) -> CheckResult:
    result = CheckResult(f"pattern sums 1..{max_n}")
    for n in range(1, max_n + 1):
        pattern = degree_pattern(n, max_n)
        order = factorial(n)
        result.checked += 1
        if pattern.group_order != order:
            result.failures.append(f"n={n}: sum of squares {pattern.group_order} != {n}!")
        if n >= 2 and pattern.multiplicity(1) != 2:
            result.failures.append(f"n={n}: degree 1 occurs {pattern.multiplicity(1)} times")
        bad = [d for d in pattern.cd if order % d]
        if bad:
            result.failures.append(f"n={n}: degrees not dividing n!: {bad[:5]}")
    return result


def check_rasala(max_n: int = 40) -> CheckResult:
    result = CheckResult(f"minimal degree closed forms up to n={max_n}")
    for i, form in FORMS.items():
        for n in range(form.min_n, max_n + 1):
            result.checked += 1
            closed, brute = rasala_value(i, n), d_index(n, i, max_n)
            if closed != brute:
                result.failures.append(f"d_{i}(S_{n}): closed form {closed} != enumeration {brute}")
    result.checked += 1
    if d_index(8, 2, max_n) != 14 or FORMS[2].raw(8) == 14:
        result.failures.append("d_2(S_8) should be 14 and differ from the closed form")
    return result


def check_prime_powers(max_n: int = 40) -> CheckResult:
    result = CheckResult(f"prime-power degrees 5..{max_n}")
    for n in range(5, max_n + 1):
        report = verify_prime_power_classification(n, max_n)
        result.checked += 1
        if report.violations:
            result.failures.append(f"n={n}: unclassified prime-power degrees {report.violations}")
        if report.missing:
            result.failures.append(f"n={n}: listed degrees absent {report.missing}")
    return result


def check_rho(max_n: int = 40) -> CheckResult:
    result = CheckResult(f"prime divisors of degrees 5..{max_n}")
    for n in range(5, max_n + 1):
        result.checked += 1
        found, expected = rho(n, max_n), set(primes_up_to(n))
        if found != expected:
            result.failures.append(f"n={n}: {sorted(found)} != {sorted(expected)}")
    return result


def check_class_identity(max_n: int = 40) -> CheckResult:
    result = CheckResult(f"k(S_n) = 2k(A_n) - 3p_s(n), 2..{max_n}")
    for n in range(2, max_n + 1):
        result.checked += 1
        k_sym, k_alt, ps = class_count(n, max_n), alt_class_count(n, max_n), count_self_conjugate(n, max_n)
        alt = alt_degree_pattern(n, max_n)
        if k_sym != 2 * k_alt - 3 * ps:
            result.failures.append(f"n={n}: {k_sym} != 2*{k_alt} - 3*{ps}")
        if alt.class_count != k_alt:
            result.failures.append(f"n={n}: X_1(A_n) has {alt.class_count} entries, k(A_n)={k_alt}")
        if alt.group_order * 2 != factorial(n):
            result.failures.append(f"n={n}: sum of squares over A_n is {alt.group_order}, not n!/2")
    return result


def check_bertrand(max_m: int = 10**6) -> CheckResult:
    result = CheckResult(f"prime in (m/2, m] for 15..{max_m}")
    primes = primes_up_to(max_m)
    for m in range(15, max_m + 1):
        p = primes[bisect_right(primes, m) - 1]
        if 2 * p <= m:
            result.failures.append(f"m={m}: largest prime <= m is {p}")
    result.checked = max(0, max_m - 14)
    return result


def check_lie() -> CheckResult:
    result = CheckResult("unipotent degree sandwich over the parameter grid")
    for spec in parameter_grid():
        result.checked += 1
        chi, st = subunipotent_degree(spec), steinberg_degree(spec)
        if not 1 < chi < st:
            result.failures.append(f"{spec.label()}: 1 < {chi} < {st} fails")
    return result


SUITES: dict[str, Callable[..., CheckResult]] = {
    "patterns": check_patterns,
    "rasala": check_rasala,
    "prime-powers": check_prime_powers,
    "rho": check_rho,
    "class-identity": check_class_identity,
    "bertrand": check_bertrand,
    "lie": check_lie,
}

# the lemma-numbered identifiers accepted by the command line
ALIASES = {
    "lemma2.1": "rasala",
    "lemma2.2": "bertrand",
    "lemma2.3": "prime-powers",
    "lemma2.4": "lie",
    "cor2.6": "rho",
    "2.6-restricted": "rho",
    "identity-k": "class-identity",
}


def run_suite(name: str, bound: int | None = None) -> CheckResult:
    key = ALIASES.get(name, name)
    try:
        suite = SUITES[key]
    except KeyError:
        known = sorted(SUITES) + sorted(ALIASES)
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(known)}") from None
    if bound is None or key == "lie":
        return suite()
    return suite(bound)
