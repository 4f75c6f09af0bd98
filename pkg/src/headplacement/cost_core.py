"""Online memory cost of placing a head among ``n`` dependents.

A head sits at position ``l`` (1-based) in a sequence of ``n + 1`` elements.
Every dependent at distance ``d`` from the head contributes ``g(d)``, where
``g`` is any strictly increasing cost function.  The total cost over head
positions forms a symmetric, quasi-convex landscape whose minima sit at the
center regardless of ``g``.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from typing import Sequence

from ._validation import check_int, check_position, check_real
from .exceptions import DomainError, ValidationError

__all__ = [
    "CostFunction",
    "Identity",
    "Power",
    "Exponential",
    "Affine",
    "Table",
    "parse_cost_spec",
    "StarInstance",
    "Landscape",
    "eval_cost",
    "total_cost",
    "total_cost_identity",
    "discrete_derivative",
    "landscape",
    "optimal_placements",
    "worst_placements",
    "star_extremes_identity",
    "check_quasiconvex",
    "is_valley_shaped",
    "costs_close",
]

# Absolute tolerance for comparing real-valued costs; integer costs compare exactly.
ABS_TOL = 1e-9


def costs_close(a, b) -> bool:
    if isinstance(a, numbers.Integral) and isinstance(b, numbers.Integral):
        return a == b
    return math.isclose(a, b, rel_tol=1e-12, abs_tol=ABS_TOL)


def _is_integral(x) -> bool:
    return isinstance(x, numbers.Integral) and not isinstance(x, bool)


class CostFunction:
    """Strictly increasing map from dependency length to memory cost.

    Subclasses implement :meth:`_value`; ``d_max`` is ``None`` for the closed
    families, which are defined for every positive length.
    """

    d_max: int | None = None

    def __call__(self, d):
        return eval_cost(self, d)

    def _value(self, d: int):
        raise NotImplementedError

    def spec(self) -> str:
        """Round-trippable textual form, see :func:`parse_cost_spec`."""
        raise NotImplementedError


@dataclass(frozen=True)
class Identity(CostFunction):
    def _value(self, d):
        return d

    def spec(self):
        return "identity"


@dataclass(frozen=True)
class Power(CostFunction):
    """``g(d) = d ** gamma`` with ``gamma > 0``."""

    gamma: float

    def __post_init__(self):
        try:
            check_real(self.gamma, "gamma", positive=True)
        except DomainError as exc:
            raise ValidationError(str(exc)) from None

    def _value(self, d):
        if _is_integral(self.gamma) or float(self.gamma).is_integer():
            return d ** int(self.gamma)
        return float(d) ** self.gamma

    def spec(self):
        return f"pow:{self.gamma:g}"


@dataclass(frozen=True)
class Exponential(CostFunction):
    """``g(d) = base ** d`` with ``base > 1``."""

    base: float

    def __post_init__(self):
        try:
            check_real(self.base, "base")
        except DomainError as exc:
            raise ValidationError(str(exc)) from None
        if not self.base > 1:
            raise ValidationError(f"exponential base must be > 1, got {self.base}")

    def _value(self, d):
        if _is_integral(self.base) or float(self.base).is_integer():
            return int(self.base) ** d
        return float(self.base) ** d

    def spec(self):
        return f"exp:{self.base:g}"


@dataclass(frozen=True)
class Affine(CostFunction):
    """``g(d) = slope * d + intercept`` with ``slope > 0`` and ``intercept >= 0``."""

    slope: float
    intercept: float = 0

    def __post_init__(self):
        try:
            check_real(self.slope, "slope", positive=True)
            check_real(self.intercept, "intercept", non_negative=True)
        except DomainError as exc:
            raise ValidationError(str(exc)) from None

    def _value(self, d):
        return self.slope * d + self.intercept

    def spec(self):
        return f"affine:{self.slope:g},{self.intercept:g}"


@dataclass(frozen=True)
class Table(CostFunction):
    """Explicit costs ``values[d - 1]`` for ``d = 1 .. len(values)``.

    Values must be positive and strictly increasing.  Lengths beyond the
    table are an error, never extrapolated.
    """

    values: tuple = field()

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValidationError("cost table is empty")
        for i, v in enumerate(values, start=1):
            if isinstance(v, bool) or not isinstance(v, numbers.Real) or v != v:
                raise ValidationError(f"table entry g({i}) is not a real number: {v!r}")
            if v <= 0:
                raise ValidationError(f"table entry g({i}) = {v} is not positive")
        for i in range(1, len(values)):
            if not values[i] > values[i - 1]:
                raise ValidationError(
                    f"table is not strictly increasing: g({i + 1}) = {values[i]} <= g({i}) = {values[i - 1]}"
                )

    @property
    def d_max(self) -> int:  # type: ignore[override]
        return len(self.values)

    def _value(self, d):
        return self.values[d - 1]

    def spec(self):
        return "table:" + ",".join(f"{v:g}" for v in self.values)


def _parse_number(token: str, spec: str):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        raise ValidationError(f"cannot parse number {token!r} in cost spec {spec!r}") from None
    if not math.isfinite(value):
        raise ValidationError(f"non-finite number {token!r} in cost spec {spec!r}")
    return value


def parse_cost_spec(spec: str) -> CostFunction:
    """Build a cost function from a compact string.

    Grammar: ``identity`` | ``pow:<gamma>`` | ``exp:<base>`` |
    ``affine:<slope>,<intercept>`` | ``table:<v1>,<v2>,...``.

    >>> parse_cost_spec("pow:2")(3)
    9
    """
    text = spec.strip()
    kind, sep, rest = text.partition(":")
    kind = kind.strip().lower()
    if kind == "identity" and not sep:
        return Identity()
    if not sep or not rest.strip():
        raise ValidationError(f"unrecognised cost spec {spec!r}")
    args = [_parse_number(tok.strip(), spec) for tok in rest.split(",")]
    if kind == "pow" and len(args) == 1:
        return Power(args[0])
    if kind == "exp" and len(args) == 1:
        return Exponential(args[0])
    if kind == "affine" and len(args) == 2:
        return Affine(args[0], args[1])
    if kind == "table":
        return Table(tuple(args))
    raise ValidationError(f"unrecognised cost spec {spec!r}")


def eval_cost(g: CostFunction, d):
    """Cost of one dependency of length ``d``."""
    d = check_int(d, "d", min_value=1)
    if g.d_max is not None and d > g.d_max:
        raise DomainError(f"cost function defined up to d={g.d_max}, requested d={d}")
    return g._value(d)


@dataclass(frozen=True)
class StarInstance:
    """A head with ``n`` dependents, placed at position ``l``."""

    n: int
    l: int

    def __post_init__(self):
        check_int(self.n, "n", min_value=1)
        check_position(self.l, self.n)

    def cost(self, g: CostFunction):
        return total_cost(self.n, self.l, g)


def _check_domain(g: CostFunction, n: int) -> None:
    if g.d_max is not None and g.d_max < n:
        raise DomainError(f"cost function defined up to d={g.d_max}, but n={n} needs d up to {n}")


def _prefix_sums(n: int, g: CostFunction) -> list:
    # sums[k] = g(1) + ... + g(k); sums[0] = 0 so g(0) is never evaluated
    sums = [0]
    for d in range(1, n + 1):
        sums.append(sums[-1] + eval_cost(g, d))
    return sums


def total_cost(n: int, l: int, g: CostFunction):
    """Total cost ``D_l`` of a head at position ``l`` with ``n`` dependents.

    Sums ``g`` over the ``l - 1`` dependents to the left and the ``n + 1 - l``
    to the right.
    """
    n = check_int(n, "n", min_value=1)
    l = check_position(l, n)
    _check_domain(g, n)
    sums = _prefix_sums(n, g)
    return sums[l - 1] + sums[n + 1 - l]


def total_cost_identity(n: int, l: int) -> int:
    """Closed form of ``D_l`` for ``g(d) = d``: ``l^2 - (n+2) l + (n+1)(n+2)/2``."""
    n = check_int(n, "n", min_value=1)
    l = check_position(l, n)
    return l * l - (n + 2) * l + (n + 1) * (n + 2) // 2


def discrete_derivative(n: int, l: int, g: CostFunction):
    """``D_{l+1} - D_l = g(l) - g(n + 1 - l)`` for ``l`` in ``[1, n]``."""
    n = check_int(n, "n", min_value=1)
    l = check_int(l, "l", min_value=1, max_value=n)
    _check_domain(g, n)
    return eval_cost(g, l) - eval_cost(g, n + 1 - l)


def _require_two_dependents(n) -> int:
    return check_int(n, "n", min_value=2)


def optimal_placements(n: int, g: CostFunction | None = None) -> tuple[int, ...]:
    """Head positions of minimum total cost.

    The center ``ceil((n+1)/2)`` for even ``n``; that position and the next for
    odd ``n``.  The result does not depend on ``g``; it is accepted only to
    check that ``g`` covers lengths up to ``n``.
    """
    n = _require_two_dependents(n)
    if g is not None:
        _check_domain(g, n)
    center = -(-(n + 1) // 2)
    return (center,) if n % 2 == 0 else (center, center + 1)


def worst_placements(n: int, g: CostFunction | None = None) -> tuple[int, ...]:
    """Head positions of maximum total cost: the two ends."""
    n = _require_two_dependents(n)
    if g is not None:
        _check_domain(g, n)
    return (1, n + 1)


@dataclass(frozen=True)
class Landscape:
    """Total cost for every head position ``l = 1 .. n + 1``.

    ``costs[0]`` holds ``D_1``; use :meth:`cost_at` for 1-based access.
    """

    n: int
    costs: tuple
    minima: tuple[int, ...]
    maxima: tuple[int, ...]

    def cost_at(self, l: int):
        return self.costs[check_position(l, self.n) - 1]

    @property
    def positions(self) -> range:
        return range(1, self.n + 2)

    @property
    def min_cost(self):
        return self.cost_at(self.minima[0])

    @property
    def max_cost(self):
        return self.cost_at(self.maxima[0])

    def numeric_minima(self) -> tuple[int, ...]:
        low = min(self.costs)
        return tuple(l for l, c in zip(self.positions, self.costs) if costs_close(c, low))

    def numeric_maxima(self) -> tuple[int, ...]:
        high = max(self.costs)
        return tuple(l for l, c in zip(self.positions, self.costs) if costs_close(c, high))


def landscape(n: int, g: CostFunction) -> Landscape:
    """Cost landscape over all head positions.

    Minima and maxima come from the center/endpoint rule and are checked
    against the numeric extremes of the computed costs; a disagreement means
    ``g`` is not strictly increasing and raises :class:`ValidationError`.
    """
    n = _require_two_dependents(n)
    _check_domain(g, n)
    sums = _prefix_sums(n, g)
    costs = tuple(sums[l - 1] + sums[n + 1 - l] for l in range(1, n + 2))
    result = Landscape(n, costs, optimal_placements(n), worst_placements(n))
    if result.numeric_minima() != result.minima or result.numeric_maxima() != result.maxima:
        raise ValidationError(
            f"landscape extremes {result.numeric_minima()}/{result.numeric_maxima()} disagree with "
            f"the center rule {result.minima}/{result.maxima}; is g strictly increasing?"
        )
    return result


def star_extremes_identity(N: int) -> tuple[int, int]:
    """Max and min sum of dependency lengths of a star tree on ``N`` vertices.

    Max ``N(N-1)/2`` (hub at an end); min ``(N-1)(N+1)/4`` for odd ``N`` and
    ``N^2/4`` for even ``N`` (hub at the center).
    """
    N = check_int(N, "N", min_value=3)
    high = N * (N - 1) // 2
    low = (N - 1) * (N + 1) // 4 if N % 2 else N * N // 4
    return high, low


def check_quasiconvex(costs: Sequence) -> bool:
    """Exhaustive test that ``costs[j] <= max(costs[i], costs[k])`` for all ``i <= j <= k``."""
    values = list(costs)
    if not values:
        raise DomainError("costs must be non-empty")
    size = len(values)
    for i in range(size):
        for k in range(i, size):
            bound = max(values[i], values[k])
            for j in range(i, k + 1):
                if values[j] > bound:
                    return False
    return True


def is_valley_shaped(costs: Sequence) -> bool:
    """Linear-time quasi-convexity test: non-increasing, then non-decreasing.

    Equivalent to :func:`check_quasiconvex` on one-dimensional sequences.
    """
    values = list(costs)
    if not values:
        raise DomainError("costs must be non-empty")
    i = 0
    while i + 1 < len(values) and values[i + 1] <= values[i]:
        i += 1
    while i + 1 < len(values) and values[i + 1] >= values[i]:
        i += 1
    return i == len(values) - 1
