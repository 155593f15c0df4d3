"""The degree-pattern multiset and its text file format.

File format: UTF-8, one ``<degree> <multiplicity>`` pair per line, degrees
strictly increasing and written in plain decimal; blank lines and lines
starting with ``#`` are ignored.
"""

from __future__ import annotations

import os
import tempfile
from collections import Counter
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import DegreeIndexError, PatternFormatError


class DegreePattern:
    """Multiset of irreducible character degrees, stored as degree -> multiplicity."""

    __slots__ = ("_entries", "_order")

    def __init__(self, entries: Mapping[int, int]):
        items = []
        for degree, mult in entries.items():
            if not isinstance(degree, int) or not isinstance(mult, int):
                raise TypeError(f"degrees and multiplicities must be int: {degree!r}: {mult!r}")
            if degree < 1 or mult < 1:
                raise ValueError(f"degree and multiplicity must be >= 1: {degree}: {mult}")
            items.append((degree, mult))
        items.sort()
        self._entries = MappingProxyType(dict(items))
        self._order = sum(d * d * m for d, m in items)

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> DegreePattern:
        return cls(Counter(degrees))

    @property
    def entries(self) -> Mapping[int, int]:
        return self._entries

    @property
    def group_order(self) -> int:
        """Sum of d^2 over the multiset, i.e. |G|."""
        return self._order

    @property
    def class_count(self) -> int:
        """Number of irreducible characters, k(G)."""
        return sum(self._entries.values())

    @property
    def cd(self) -> tuple[int, ...]:
        return tuple(self._entries)

    def d(self, i: int) -> int:
        """The i-th smallest nontrivial distinct degree (i >= 1)."""
        nontrivial = [deg for deg in self._entries if deg > 1]
        if i < 1 or i > len(nontrivial):
            raise DegreeIndexError(
                f"d_{i} undefined: only {len(nontrivial)} nontrivial degrees"
            )
        return nontrivial[i - 1]

    def multiplicity(self, degree: int) -> int:
        return self._entries.get(degree, 0)

    def degrees(self) -> Iterator[int]:
        """Expanded degrees in ascending order, with repetition."""
        for degree, mult in self._entries.items():
            for _ in range(mult):
                yield degree

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._entries.items())

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, degree: object) -> bool:
        return degree in self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegreePattern):
            return NotImplemented
        return dict(self._entries) == dict(other._entries)

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{d}: {m}" for d, m in self._entries.items())
        return f"DegreePattern({{{body}}})"

    def scaled(self, factor: int) -> DegreePattern:
        """Every multiplicity multiplied by ``factor`` (X_1 of G x A, A abelian of that order)."""
        return DegreePattern({d: m * factor for d, m in self._entries.items()})

    # -- serialization --

    def to_text(self, header: Iterable[str] = ()) -> str:
        lines = [f"# {line}" for line in header]
        lines.extend(f"{d} {m}" for d, m in self._entries.items())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> DegreePattern:
        entries: dict[int, int] = {}
        last = 0
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2 or not all(f.isdigit() for f in fields):
                raise PatternFormatError(f"line {lineno}: expected '<degree> <multiplicity>', got {raw!r}")
            degree, mult = int(fields[0]), int(fields[1])
            if degree < 1 or mult < 1:
                raise PatternFormatError(f"line {lineno}: degree and multiplicity must be >= 1")
            if degree <= last:
                raise PatternFormatError(f"line {lineno}: degrees must be strictly increasing")
            entries[degree] = mult
            last = degree
        if not entries:
            raise PatternFormatError("empty degree pattern")
        return cls(entries)


def read_pattern(path: str | os.PathLike) -> DegreePattern:
    with open(path, encoding="utf-8") as fh:
        return DegreePattern.from_text(fh.read())


def write_pattern(pattern: DegreePattern, path: str | os.PathLike, header: Iterable[str] = ()) -> None:
    """Write atomically: a temp file in the target directory, then rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".pattern-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(pattern.to_text(header))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
