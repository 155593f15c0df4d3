"""Closed forms for the eleven smallest nontrivial degrees of S_n.

Each form is ``prod(n - r for r in roots) / denominator``. The first six hold
for n >= 15 and the next five for n >= 22; below those windows the true
values are found by enumeration instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Callable

from .errors import DegreeIndexError, IntegralityError, WindowError
from .partitions import Partition
from .sym_degrees import d_index


def _shape(head: tuple[int, ...], fill: int = 1) -> Callable[[int], Partition]:
    # negative head entries are offsets from n: (-1,) builds (n - 1, 1)
    def build(n: int) -> Partition:
        parts = [n + h if h <= 0 else h for h in head]
        rest = n - sum(parts)
        return Partition(tuple(parts) + (fill,) * rest)

    return build


@dataclass(frozen=True)
class RasalaForm:
    index: int
    roots: tuple[int, ...]
    denominator: int
    min_n: int
    labels: tuple[str, str]
    shapes: tuple[Callable[[int], Partition], Callable[[int], Partition]]

    def __call__(self, n: int) -> int:
        return self.value(n)

    def value(self, n: int) -> int:
        if n < self.min_n:
            raise WindowError(f"d_{self.index} closed form needs n >= {self.min_n}, got {n}")
        return self.raw(n)

    def raw(self, n: int) -> int:
        """Evaluate the polynomial with no window check (integrality still asserted)."""
        q, r = divmod(prod(n - root for root in self.roots), self.denominator)
        if r:
            raise IntegralityError(f"d_{self.index}({n}) is not an integer")
        return q

    def coefficients(self) -> list[Fraction]:
        """Exact coefficients in n, constant term first."""
        coeffs = [Fraction(1)]
        for root in self.roots:
            shifted = [Fraction(0)] + coeffs
            for k, c in enumerate(coeffs):
                shifted[k] -= root * c
            coeffs = shifted
        return [c / self.denominator for c in coeffs]

    def partitions(self, n: int) -> tuple[Partition, Partition]:
        return self.shapes[0](n), self.shapes[1](n)


FORMS: dict[int, RasalaForm] = {
    f.index: f
    for f in (
        RasalaForm(1, (1,), 1, 15, ("(n-1,1)", "(2,1^(n-2))"), (_shape((-1,)), _shape((2,)))),
        RasalaForm(2, (0, 3), 2, 15, ("(n-2,2)", "(2^2,1^(n-4))"), (_shape((-2, 2)), _shape((2, 2)))),
        RasalaForm(3, (1, 2), 2, 15, ("(n-2,1^2)", "(3,1^(n-3))"), (_shape((-2,)), _shape((3,)))),
        RasalaForm(4, (0, 1, 5), 6, 15, ("(n-3,3)", "(2^3,1^(n-6))"), (_shape((-3, 3)), _shape((2, 2, 2)))),
        RasalaForm(5, (1, 2, 3), 6, 15, ("(n-3,1^3)", "(4,1^(n-4))"), (_shape((-3,)), _shape((4,)))),
        RasalaForm(6, (0, 2, 4), 3, 15, ("(n-3,2,1)", "(3,2,1^(n-5))"), (_shape((-3, 2)), _shape((3, 2)))),
        RasalaForm(7, (0, 1, 2, 7), 24, 22, ("(n-4,4)", "(2^4,1^(n-8))"), (_shape((-4, 4)), _shape((2, 2, 2, 2)))),
        RasalaForm(8, (1, 2, 3, 4), 24, 22, ("(n-4,1^4)", "(5,1^(n-5))"), (_shape((-4,)), _shape((5,)))),
        RasalaForm(9, (0, 1, 4, 5), 12, 22, ("(n-4,2^2)", "(3^2,1^(n-6))"), (_shape((-4, 2, 2)), _shape((3, 3)))),
        RasalaForm(10, (0, 1, 3, 6), 8, 22, ("(n-4,3,1)", "(3,2^2,1^(n-7))"), (_shape((-4, 3)), _shape((3, 2, 2)))),
        RasalaForm(11, (0, 2, 3, 5), 8, 22, ("(n-4,2,1^2)", "(4,2,1^(n-6))"), (_shape((-4, 2)), _shape((4, 2)))),
    )
}


def _form(i: int) -> RasalaForm:
    try:
        return FORMS[i]
    except KeyError:
        raise ValueError(f"closed forms exist for i in 1..11, got {i}") from None


def min_valid_n(i: int) -> int:
    return _form(i).min_n


def rasala_value(i: int, n: int) -> int:
    """Closed-form d_i(S_n); raises WindowError below the validity window."""
    return _form(i).value(n)


def minimal_degree(i: int, n: int) -> int:
    """The true d_i(S_n) for ``n >= 5``: closed form on its window, enumeration below."""
    return minimal_degree_with_source(i, n)[0]


def minimal_degree_with_source(i: int, n: int) -> tuple[int, str]:
    form = _form(i)
    if n < 5:
        raise ValueError(f"minimal_degree needs n >= 5, got {n}")
    if n >= form.min_n:
        return form.value(n), "closed-form"
    # the forms are wrong below the window (d_2(S_8) = 14, not 20)
    try:
        return d_index(n, i, max_n=n), "enumeration"
    except DegreeIndexError:
        raise DegreeIndexError(f"S_{n} has fewer than {i} nontrivial degrees") from None


def rasala_table(n: int, count: int = 11) -> list[tuple[int, int | None, str]]:
    """Rows ``(i, d_i(S_n) or None, source)`` for i = 1..count."""
    rows = []
    for i in range(1, count + 1):
        try:
            value, source = minimal_degree_with_source(i, n)
        except DegreeIndexError:
            value, source = None, "undefined"
        rows.append((i, value, source))
    return rows


def solve_degree_equation(i: int, c: int) -> set[int]:
    """All n in the window of d_i with ``rasala_value(i, n) == c``.

    Every form is strictly increasing on its window (all roots lie below it),
    so this is an integer bisection.
    """
    form = _form(i)
    if c < 1:
        raise ValueError(f"c must be positive, got {c}")
    lo = form.min_n
    if form.raw(lo) > c:
        return set()
    hi = lo + 1
    while form.raw(hi) < c:
        hi = lo + 2 * (hi - lo)
    # invariant: raw(lo) <= c <= raw(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if form.raw(mid) <= c:
            lo = mid
        else:
            hi = mid
    return {n for n in (lo, hi) if form.raw(n) == c}
