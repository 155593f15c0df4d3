"""Unipotent and Steinberg degrees of finite simple groups of Lie type.

One unipotent degree strictly between 1 and the Steinberg degree is recorded
per family, as a polynomial in q built from cyclotomic factors. For the
Suzuki and Ree families the natural parameter q is irrational (q^2 is the
field size), so those formulas are evaluated in an exact quadratic extension
and must come out as plain integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, Union

from .errors import IntegralityError, InvalidLieSpec
from .numtheory import prime_power_decompose

# coefficients of Phi_k, constant term first
CYCLOTOMIC = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    6: (1, -1, 1),
    7: (1, 1, 1, 1, 1, 1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    12: (1, 0, -1, 0, 1),
    14: (1, -1, 1, -1, 1, -1, 1),
    18: (1, 0, 0, -1, 0, 0, 1),
    20: (1, 0, -1, 0, 1, 0, -1, 0, 1),
    24: (1, 0, 0, 0, -1, 0, 0, 0, 1),
}

Number = Union[int, Fraction, "QuadraticSurd"]


class QuadraticSurd:
    """Exact ``a + b*sqrt(r)`` with rational a, b and squarefree r."""

    __slots__ = ("a", "b", "r")

    def __init__(self, a: int | Fraction, b: int | Fraction, r: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.r = r

    @classmethod
    def sqrt(cls, r: int) -> QuadraticSurd:
        return cls(0, 1, r)

    def _coerce(self, other: object) -> QuadraticSurd:
        if isinstance(other, QuadraticSurd):
            if other.r != self.r:
                raise ValueError(f"mixed radicands {self.r} and {other.r}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(other, 0, self.r)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticSurd(self.a + o.a, self.b + o.b, self.r)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.r)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticSurd(
            self.a * o.a + self.r * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.r,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd(self.a, -self.b, self.r)

    def norm(self) -> Fraction:
        return self.a * self.a - self.r * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        norm = o.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        num = self * o.conjugate()
        return QuadraticSurd(num.a / norm, num.b / norm, self.r)

    def __pow__(self, k: int):
        result = QuadraticSurd(1, 0, self.r)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self.a, self.b) == (o.a, o.b)

    def __hash__(self):
        return hash((self.a, self.b, self.r))

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def to_int(self) -> int:
        if not self.is_integer():
            raise IntegralityError(f"{self} is not a rational integer")
        return int(self.a)

    def __repr__(self):
        return f"QuadraticSurd({self.a}, {self.b}, {self.r})"

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt({self.r})"


def cyclotomic(k: int, q: Number) -> Number:
    """Phi_k evaluated at q by Horner's rule; q may be an int or a surd."""
    try:
        coeffs = CYCLOTOMIC[k]
    except KeyError:
        raise ValueError(f"unsupported cyclotomic index {k}; have {sorted(CYCLOTOMIC)}") from None
    acc = 0
    for c in reversed(coeffs):
        acc = acc * q + c
    return acc


def cyclotomic_value(k: int, q: int) -> int:
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    return cyclotomic(k, q)


# -- family specs --

CLASSICAL = ("A", "2A", "B", "C", "D", "2D")
EXCEPTIONAL = ("G2", "3D4", "F4", "E6", "2E6", "E7", "E8")
SUZUKI_REE = {"2B2": 2, "2G2": 3, "2F4": 2}
FAMILIES = CLASSICAL + EXCEPTIONAL + tuple(SUZUKI_REE) + ("L2",)

EXCLUSIONS = {
    ("L2", None, 4): "L_2(4) is isomorphic to A_5",
    ("L2", None, 5): "L_2(5) is isomorphic to A_5",
    ("L2", None, 9): "L_2(9) is isomorphic to A_6",
    ("A", 4, 2): "L_4(2) is isomorphic to A_8",
    ("G2", None, 2): "G_2(2) is not simple (G_2(2) = U_3(3).2)",
    ("B", 2, 2): "S_4(2) is not simple (S_4(2) = S_6)",
    ("C", 2, 2): "S_4(2) is not simple (S_4(2) = S_6)",
}


@dataclass(frozen=True)
class LieFamilySpec:
    """A simple group of Lie type by family, rank and field.

    ``rank`` is the classical parameter: A/2A with rank n means L_n(q) / U_n(q)
    (Dynkin type A_{n-1}); B, C, D, 2D use the Dynkin rank. For Suzuki-Ree
    families the field has ``p ** (2m + 1)`` elements and ``q`` stores that
    field size; ``m`` is required.
    """

    family: str
    q: int
    rank: int | None = None
    m: int | None = None

    def __post_init__(self):
        validate(self)

    @classmethod
    def suzuki_ree(cls, family: str, m: int) -> LieFamilySpec:
        if family not in SUZUKI_REE:
            raise InvalidLieSpec(f"{family} is not a Suzuki-Ree family")
        if m < 1:
            raise InvalidLieSpec(f"{family} needs m >= 1 (m = 0 gives a non-simple or excluded group), got {m}")
        return cls(family, SUZUKI_REE[family] ** (2 * m + 1), m=m)

    @property
    def p(self) -> int:
        return prime_power_decompose(self.q).p

    def label(self) -> str:
        if self.family in SUZUKI_REE:
            return f"{self.family}({self.q})"
        if self.rank is not None:
            return f"{self.family}{self.rank}({self.q})"
        return f"{self.family}({self.q})"


def validate(spec: LieFamilySpec) -> None:
    f, n, q = spec.family, spec.rank, spec.q
    if f not in FAMILIES:
        raise InvalidLieSpec(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
    if not isinstance(q, int) or q < 2 or prime_power_decompose(q) is None:
        raise InvalidLieSpec(f"q must be a prime power, got {q}")
    needs_rank = {"A": 3, "2A": 3, "B": 2, "C": 2, "D": 4, "2D": 4}
    if f in needs_rank:
        if n is None or n < needs_rank[f]:
            raise InvalidLieSpec(f"family {f} needs rank >= {needs_rank[f]}, got {n}")
    elif n is not None:
        raise InvalidLieSpec(f"family {f} takes no rank parameter")
    if f in SUZUKI_REE:
        p = SUZUKI_REE[f]
        m = spec.m
        if m is None or m < 1 or q != p ** (2 * m + 1):
            raise InvalidLieSpec(f"{f} needs field size {p}^(2m+1) with m >= 1, got q={q}, m={m}")
    elif spec.m is not None:
        raise InvalidLieSpec(f"family {f} takes no m parameter")
    if f == "G2" and q < 3:
        raise InvalidLieSpec(EXCLUSIONS[("G2", None, 2)])
    if f == "L2" and q < 4:
        raise InvalidLieSpec(f"L_2({q}) is solvable")
    reason = EXCLUSIONS.get((f, n, q))
    if reason:
        raise InvalidLieSpec(reason)


def steinberg_degree(spec: LieFamilySpec) -> int:
    """|S|_p, the degree of the Steinberg character."""
    f, n, q = spec.family, spec.rank, spec.q
    if f in ("A", "2A"):
        return q ** (n * (n - 1) // 2)
    if f in ("B", "C"):
        return q ** (n * n)
    if f in ("D", "2D"):
        return q ** (n * (n - 1))
    exponent = {"G2": 6, "3D4": 12, "F4": 24, "E6": 36, "2E6": 36, "E7": 63, "E8": 120}
    if f in exponent:
        return q ** exponent[f]
    # Suzuki-Ree: |S|_p = Q^4, Q^6, Q^24 with Q^2 = q the field size
    twisted = {"2B2": 2, "2G2": 3, "2F4": 12}
    if f in twisted:
        return q ** twisted[f]
    if f == "L2":
        return q
    raise InvalidLieSpec(f"unknown family {f!r}")


def _phis(q: Number, *ks: int) -> Number:
    acc: Number = 1
    for k in ks:
        acc = acc * cyclotomic(k, q)
    return acc


def _exact_div(num: int, den: int, what: str) -> int:
    quotient, rem = divmod(num, den)
    if rem:
        raise IntegralityError(f"{what}: {num}/{den} is not an integer")
    return quotient


# sub-Steinberg unipotent degree per exceptional family, as q * prod(Phi_k) / divisor
_EXCEPTIONAL_DEGREES: dict[str, tuple[int, tuple[int, ...], int, str]] = {
    "G2": (1, (2, 2, 3), 6, "phi_{2,1}"),
    "3D4": (1, (12,), 1, "phi_{1,3}'"),
    "F4": (2, (3, 3, 6, 6, 12), 1, "phi_{9,2}"),
    "E6": (1, (8, 9), 1, "phi_{6,1}"),
    "2E6": (1, (8, 18), 1, "phi_{2,4}'"),
    "E7": (1, (7, 12, 14), 1, "phi_{7,1}"),
    "E8": (1, (4, 4, 8, 12, 20, 24), 1, "phi_{8,1}"),
}

# Suzuki-Ree: Q * prod(Phi_k(Q)) / sqrt(p), Q = sqrt(field size)
_TWISTED_DEGREES: dict[str, tuple[tuple[int, ...], str]] = {
    "2B2": ((1, 2), "2B2[a]"),
    "2G2": ((1, 2, 4), "unipotent of degree Q Phi1 Phi2 Phi4 / sqrt(3)"),
    "2F4": ((1, 2, 4, 4, 12), "2B2[a],1"),
}

LABELS = {
    "A": "alpha = (1, n-1)",
    "2A": "alpha = (1, n-1)",
    "B": "symbol (0 1 n / -)",
    "C": "symbol (0 1 n / -)",
    "D": "symbol (n-1 / 1)",
    "2D": "symbol (1 n-1 / -)",
    **{f: v[3] for f, v in _EXCEPTIONAL_DEGREES.items()},
    **{f: v[1] for f, v in _TWISTED_DEGREES.items()},
}


def twisted_degree_surd(family: str, m: int, phis: tuple[int, ...] | None = None) -> QuadraticSurd:
    """The Suzuki-Ree unipotent degree as an element of Q(sqrt p), before integrality."""
    p = SUZUKI_REE[family]
    ks = _TWISTED_DEGREES[family][0] if phis is None else phis
    Q = QuadraticSurd(p**m, 0, p) * QuadraticSurd.sqrt(p)  # Q^2 = p^(2m+1)
    return Q * _phis(Q, *ks) / QuadraticSurd.sqrt(p)


def subunipotent_degree(spec: LieFamilySpec) -> int:
    """Degree of a unipotent character chi_1 with 1 < chi_1(1) < |S|_p."""
    f, n, q = spec.family, spec.rank, spec.q
    if f == "A":
        return _exact_div(q**n - q, q - 1, spec.label())
    if f == "2A":
        return _exact_div(q**n + (-1) ** n * q, q + 1, spec.label())
    if f in ("B", "C"):
        return _exact_div((q**n - 1) * (q**n - q), 2 * (q + 1), spec.label())
    if f == "D":
        return _exact_div((q**n - 1) * (q ** (n - 1) + q), q * q - 1, spec.label())
    if f == "2D":
        return _exact_div((q**n + 1) * (q ** (n - 1) - q), q * q - 1, spec.label())
    if f in _EXCEPTIONAL_DEGREES:
        power, ks, divisor, _ = _EXCEPTIONAL_DEGREES[f]
        return _exact_div(q**power * _phis(q, *ks), divisor, spec.label())
    if f in _TWISTED_DEGREES:
        return twisted_degree_surd(f, spec.m).to_int()
    raise InvalidLieSpec(f"{spec.label()} has no recorded sub-Steinberg unipotent degree")


def verify_sandwich(spec: LieFamilySpec) -> bool:
    """True iff 1 < chi_1(1) < St(1)."""
    return 1 < subunipotent_degree(spec) < steinberg_degree(spec)


def parameter_grid() -> Iterator[LieFamilySpec]:
    """The sweep used by the checks; excluded groups are skipped."""
    qs = (2, 3, 4, 5, 7, 8, 9)
    ranges = {"A": range(3, 9), "2A": range(3, 9), "B": range(2, 7), "C": range(2, 7), "D": range(4, 8), "2D": range(4, 8)}
    candidates: list[Callable[[], LieFamilySpec]] = []
    for family, ranks in ranges.items():
        for n, q in product(ranks, qs):
            candidates.append(lambda f=family, n=n, q=q: LieFamilySpec(f, q, rank=n))
    for family in EXCEPTIONAL:
        for q in qs:
            candidates.append(lambda f=family, q=q: LieFamilySpec(f, q))
    for family in SUZUKI_REE:
        for m in (1, 2, 3):
            candidates.append(lambda f=family, m=m: LieFamilySpec.suzuki_ree(f, m))
    for make in candidates:
        try:
            yield make()
        except InvalidLieSpec:
            continue


# -- L_2(q) --

L2_RANGES = ("within-PGL", "within-PGammaL", "above-PGL", "generic")


def l2q_guaranteed_degrees(q: int, automorphism_range: str = "generic") -> frozenset[int]:
    """Degrees forced in an almost simple G with socle L_2(q), q >= 7.

    For p != 3 the answer is ``{q + delta}`` with ``q = delta (mod 3)`` for
    every range. For p = 3 with ``q = eps (mod 4)``:

    - ``within-PGL`` (G <= PGL_2(q)): both ``q - 1`` and ``q + 1``;
    - ``within-PGammaL`` (G does not lie above PGL_2(q)): ``(q + eps) / 2``;
    - ``above-PGL`` (PGL_2(q) <= G): ``q + eps``;
    - ``generic``: the two candidates, at least one of which occurs.
    """
    if automorphism_range not in L2_RANGES:
        raise ValueError(f"automorphism_range must be one of {L2_RANGES}, got {automorphism_range!r}")
    if q < 7:
        raise ValueError(f"q must be >= 7, got {q}")
    decomposition = prime_power_decompose(q)
    if decomposition is None:
        raise ValueError(f"q must be a prime power, got {q}")
    if decomposition.p != 3:
        delta = 1 if q % 3 == 1 else -1
        return frozenset({q + delta})
    eps = 1 if q % 4 == 1 else -1
    if automorphism_range == "within-PGL":
        return frozenset({q - 1, q + 1})
    if automorphism_range == "within-PGammaL":
        return frozenset({(q + eps) // 2})
    if automorphism_range == "above-PGL":
        return frozenset({q + eps})
    return frozenset({(q + eps) // 2, q + eps})


def l2_step1_inequality(q: int) -> tuple[int, int, int, bool]:
    """With n - 1 = q: ``(d_2(S_n), q + 1, q, d_2 > q + 1 > q)``, d_2 = n(n-3)/2."""
    n = q + 1
    d2 = n * (n - 3) // 2
    return d2, q + 1, q, d2 > q + 1 > q
