"""Exception types and the enumeration cap shared across the package."""

from __future__ import annotations

import os

DEFAULT_MAX_N = 50
MAX_N_ENV = "SYMDEG_MAX_N"


class LimitExceededError(ValueError):
    """Raised when a request needs full enumeration above the configured cap."""


class WindowError(ValueError):
    """Raised when a closed form is evaluated outside its validity window."""


class DegreeIndexError(IndexError):
    """Raised when asking for d_i beyond the number of nontrivial degrees."""


class IntegralityError(ArithmeticError):
    """Raised when an exact formula fails to produce an integer."""


class InvalidLieSpec(ValueError):
    pass


class UnknownGroupError(LookupError):
    pass


class PatternFormatError(ValueError):
    pass


def default_max_n() -> int:
    """The enumeration cap: ``$SYMDEG_MAX_N`` if set, else 50."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_N
    try:
        value = int(raw.strip(), 10)
    except ValueError:
        raise ValueError(f"{MAX_N_ENV} must be a decimal integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{MAX_N_ENV} must be positive, got {value}")
    return value


def check_cap(n: int, max_n: int | None = None) -> None:
    cap = default_max_n() if max_n is None else max_n
    if n > cap:
        raise LimitExceededError(
            f"n={n} exceeds the enumeration cap {cap} "
            f"(raise it with {MAX_N_ENV} or an explicit max_n)"
        )
