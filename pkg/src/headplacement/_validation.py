"""Input checking helpers shared by the public modules."""
from __future__ import annotations

import numbers

from .exceptions import DomainError


def check_int(value, name: str, *, min_value: int | None = None, max_value: int | None = None) -> int:
    """Return ``value`` as an int, raising DomainError if it is not an integer in range."""
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if min_value is not None and value < min_value:
        raise DomainError(f"{name} must be >= {min_value}, got {value}")
    if max_value is not None and value > max_value:
        raise DomainError(f"{name} must be <= {max_value}, got {value}")
    return value


def check_real(value, name: str, *, positive: bool = False, non_negative: bool = False):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise DomainError(f"{name} must be a real number, got {value!r}")
    if value != value:
        raise DomainError(f"{name} must not be NaN")
    if positive and not value > 0:
        raise DomainError(f"{name} must be > 0, got {value}")
    if non_negative and value < 0:
        raise DomainError(f"{name} must be >= 0, got {value}")
    return value


def check_position(l, n: int) -> int:
    """Check a 1-based head position against ``n`` dependents."""
    return check_int(l, "l", min_value=1, max_value=n + 1)


def check_paired(xs, ys, *, min_size: int = 2):
    xs = list(xs)
    ys = list(ys)
    if len(xs) != len(ys):
        raise DomainError(f"samples differ in length: {len(xs)} != {len(ys)}")
    if len(xs) < min_size:
        raise DomainError(f"need at least {min_size} paired observations, got {len(xs)}")
    for v in xs + ys:
        check_real(v, "observation")
    return xs, ys
