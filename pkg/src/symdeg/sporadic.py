"""Sporadic groups, the Tits group and listed automorphism groups.

Each record carries the largest prime divisor of the order and the three
smallest nontrivial character degrees. ``replay_elimination`` walks a range
of n and shows, for each n, which degree inequality rules out
``cd(G) <= cd(S_n)``.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field
from types import MappingProxyType

from .errors import UnknownGroupError
from .numtheory import is_prime
from .rasala import rasala_value


@dataclass(frozen=True)
class SporadicRecord:
    name: str
    largest_prime: int
    d1: int
    d2: int
    d3: int

    @property
    def is_extension(self) -> bool:
        return self.name.endswith(".2")

    @property
    def simple_name(self) -> str:
        return self.name[:-2] if self.is_extension else self.name

    @property
    def has_outer_2(self) -> bool:
        return self.is_extension or f"{self.name}.2" in TABLE

    def known_degrees(self) -> dict[int, int]:
        """Index -> d_i for every index recorded (table plus supplementary)."""
        known = {1: self.d1, 2: self.d2, 3: self.d3}
        known.update(SUPPLEMENTARY.get(self.name, {}))
        return known


# name, p(S), d1, d2, d3
_ROWS = [
    ("M11", 11, 10, 11, 16),
    ("M12", 11, 11, 16, 45),
    ("M12.2", 11, 22, 32, 45),
    ("J1", 19, 56, 76, 77),
    ("M22", 11, 21, 45, 55),
    ("M22.2", 11, 21, 45, 55),
    ("J2", 7, 14, 21, 36),
    ("J2.2", 7, 28, 36, 42),
    ("M23", 23, 22, 45, 230),
    ("HS", 11, 22, 77, 154),
    ("HS.2", 11, 22, 77, 154),
    ("J3", 19, 85, 323, 324),
    ("J3.2", 19, 170, 324, 646),
    ("M24", 23, 23, 45, 231),
    ("McL", 11, 22, 231, 252),
    ("McL.2", 11, 22, 231, 252),
    ("He", 17, 51, 153, 680),
    ("He.2", 17, 102, 306, 680),
    ("Ru", 29, 378, 406, 783),
    ("Suz", 13, 143, 364, 780),
    ("Suz.2", 13, 143, 364, 780),
    ("O'N", 31, 10944, 13376, 25916),
    ("O'N.2", 31, 10944, 26752, 37696),
    ("Co3", 23, 23, 253, 275),
    ("Co2", 23, 23, 253, 275),
    ("Fi22", 13, 78, 429, 1001),
    ("Fi22.2", 13, 78, 429, 1001),
    ("HN", 19, 133, 760, 3344),
    ("HN.2", 19, 266, 760, 3344),
    ("Ly", 67, 2480, 45694, 48174),
    ("Th", 31, 248, 4123, 27000),
    ("Fi23", 23, 782, 3588, 5083),
    ("Co1", 23, 276, 299, 1771),
    ("J4", 43, 1333, 299367, 887778),
    ("Fi24'", 29, 8671, 57477, 249458),
    ("Fi24'.2", 29, 8671, 57477, 249458),
    ("B", 47, 4371, 96255, 1139374),
    ("M", 71, 196883, 21296876, 842609326),
    ("2F4(2)'", 13, 26, 27, 78),
    ("2F4(2)'.2", 13, 27, 52, 78),
]

TABLE: MappingProxyType = MappingProxyType({row[0]: SporadicRecord(*row) for row in _ROWS})

# Further degrees quoted in the elimination arguments, outside the three-column table.
SUPPLEMENTARY: MappingProxyType = MappingProxyType({
    "O'N": {8: 58311, 9: 58653},
    "O'N.2": {7: 58653},
    "HN": {7: 16929},
    "HN.2": {7: 17556},
    "Ly": {5: 381766},
})

_ALIASES = {
    "ON": "O'N", "ON.2": "O'N.2", "Fi24": "Fi24'", "Fi24.2": "Fi24'.2",
    "Tits": "2F4(2)'", "Tits.2": "2F4(2)'.2", "2F4(2)": "2F4(2)'.2",
}


def lookup(name: str) -> SporadicRecord:
    key = _ALIASES.get(name, name)
    try:
        return TABLE[key]
    except KeyError:
        close = difflib.get_close_matches(name, list(TABLE), n=3, cutoff=0.4)
        hint = f"; did you mean {', '.join(close)}?" if close else ""
        raise UnknownGroupError(f"no table row named {name!r}{hint}") from None


def validate_table() -> list[str]:
    """Problems found in the embedded data (empty when consistent)."""
    problems = []
    if len(TABLE) != 40 or len(_ROWS) != 40:
        problems.append(f"expected 40 rows, have {len(_ROWS)} ({len(TABLE)} distinct)")
    for rec in TABLE.values():
        if not is_prime(rec.largest_prime):
            problems.append(f"{rec.name}: p(S)={rec.largest_prime} is not prime")
        if not (1 < rec.d1 <= rec.d2 <= rec.d3 and rec.d1 < rec.d3):
            problems.append(f"{rec.name}: degrees {rec.d1}, {rec.d2}, {rec.d3} out of order")
        known = rec.known_degrees()
        ordered = [known[i] for i in sorted(known)]
        if ordered != sorted(ordered):
            problems.append(f"{rec.name}: supplementary degrees out of order")
    return problems


# -- elimination replay --

REPLAY_MIN_N = 32
DEFAULT_REPLAY_MAX_N = 10**6


@dataclass(frozen=True)
class Elimination:
    n: int
    predicate: str | None
    witness: str

    @property
    def eliminated(self) -> bool:
        return self.predicate is not None


@dataclass
class EliminationReport:
    name: str
    n_min: int
    n_max: int
    almost_simple: list[Elimination] = field(default_factory=list)
    wreath: list[Elimination] | None = None

    @property
    def survivors(self) -> list[int]:
        return [e.n for e in self.almost_simple if not e.eliminated]

    @property
    def wreath_survivors(self) -> list[int]:
        return [] if self.wreath is None else [e.n for e in self.wreath if not e.eliminated]

    @property
    def eliminated(self) -> bool:
        return not self.survivors and not self.wreath_survivors


def _low_degrees(n: int) -> list[int]:
    # d_1..d_11 of S_n; the closed forms are exact here because n >= 32
    return [rasala_value(i, n) for i in range(1, 12)]


def _membership(value: int, low: list[int], n: int, label: str) -> Elimination | None:
    # every degree of S_n below d_11 is one of d_1..d_10
    if value < low[10] and value not in low[:10]:
        return Elimination(n, "not-a-degree", f"{label}={value} lies below d_11(S_{n})={low[10]} and is none of d_1..d_10")
    return None


def _almost_simple_check(rec: SporadicRecord, n: int) -> Elimination:
    """cd(G) <= cd(S_n) forces p(S) <= n, d_i(G) >= d_i(S_n) and each d_i(G) in cd(S_n)."""
    if rec.largest_prime > n:
        return Elimination(n, "prime-containment", f"p(S)={rec.largest_prime} > {n}, so p(S) does not divide n!")
    known = rec.known_degrees()
    for i in sorted(known):
        if i <= 11 and known[i] < (bound := rasala_value(i, n)):
            return Elimination(n, "monotonicity", f"d_{i}(G)={known[i]} < d_{i}(S_{n})={bound}")
    low = _low_degrees(n)
    for i in sorted(known):
        hit = _membership(known[i], low, n, f"d_{i}(G)")
        if hit:
            return hit
    return Elimination(n, None, "")


def _wreath_check(rec: SporadicRecord, n: int) -> Elimination:
    """G' = S x S with |G:G'| = 2: each a in cd(S)-{1} puts 2a and a^2 in cd(S_n)."""
    p = rec.largest_prime
    if n < 2 * p:
        return Elimination(n, "prime-square", f"p(S)^2={p * p} divides a^2 in cd(S_n) but not {n}! since {n} < 2p(S)")
    bound = p * (2 * p - 3)
    if bound > 2 * rec.d2 and rec.d1 < rec.d2:
        # n >= 2p gives d_2(S_n) = n(n-3)/2 >= p(2p-3); 2d_1 < 2d_2 would both sit below d_2(S_n)
        return Elimination(
            n, "wreath-d2-bound",
            f"d_2(S_{n}) >= p(S)(2p(S)-3) = {bound} > 2d_2(S) = {2 * rec.d2} > 2d_1(S) = {2 * rec.d1}",
        )
    known = rec.known_degrees()
    values = sorted({2 * a for a in known.values()} | {a * a for a in known.values()})
    for rank, value in enumerate(values, 1):
        if rank <= 11 and value < (floor := rasala_value(rank, n)):
            return Elimination(
                n, "monotonicity",
                f"{rank} forced degrees are <= {value} but d_{rank}(S_{n})={floor}",
            )
    low = _low_degrees(n)
    for value in values:
        hit = _membership(value, low, n, "forced degree")
        if hit:
            return hit
    return Elimination(n, None, "")


def replay_elimination(name: str, n_min: int, n_max: int, max_n: int = DEFAULT_REPLAY_MAX_N) -> EliminationReport:
    """Replay the degree-inequality eliminations of ``name`` over ``n_min..n_max``.

    Two situations are checked per n: G almost simple with the row's degrees
    (table plus supplementary values), and, for simple rows, a group whose
    derived subgroup is S x S with index 2.
    """
    rec = lookup(name)
    if n_min < REPLAY_MIN_N:
        raise ValueError(f"replay needs n_min >= {REPLAY_MIN_N} (closed-form window), got {n_min}")
    if n_max < n_min or n_max > max_n:
        raise ValueError(f"need {n_min} <= n_max <= {max_n}, got {n_max}")
    report = EliminationReport(rec.name, n_min, n_max)
    report.almost_simple = [_almost_simple_check(rec, n) for n in range(n_min, n_max + 1)]
    if not rec.is_extension:
        report.wreath = [_wreath_check(rec, n) for n in range(n_min, n_max + 1)]
    return report
