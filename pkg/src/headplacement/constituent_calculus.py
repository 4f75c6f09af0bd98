"""Dependency lengths between the heads of S, V and O (``g(d) = d``).

Each constituent ``x`` spans ``|x|`` contiguous words, ``L_x`` of them before
its head word and ``R_x`` after, so ``|x| = L_x + 1 + R_x``.  The verb head
governs the heads of S and O; ``delta`` is the sum of those two lengths.
"left"/"right" refer to placing all dependents of the nominal heads before or
after the noun.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._validation import check_int, check_real
from .exceptions import ConservationWarning, DomainError, ValidationError
from .permutation_space import WordOrder

__all__ = [
    "Side",
    "ConstituentLengths",
    "HeadSplit",
    "InternalCosts",
    "LengthDistribution",
    "delta_sov",
    "delta_svo",
    "delta_sov_left",
    "delta_sov_right",
    "delta_svo_left",
    "delta_svo_right",
    "preferred_side",
    "omega_total",
    "RegressionComparison",
    "regression_comparison",
    "expected_delta_svo",
    "layout_delta",
]


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TIE = "tie"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConstituentLengths:
    s: int
    v: int
    o: int

    def __post_init__(self):
        for name in ("s", "v", "o"):
            check_int(getattr(self, name), name, min_value=1)


@dataclass(frozen=True)
class HeadSplit:
    """Words before (``left``) and after (``right``) a constituent's head."""

    left: int
    right: int
    total: int

    def __post_init__(self):
        check_int(self.left, "left", min_value=0)
        check_int(self.right, "right", min_value=0)
        check_int(self.total, "total", min_value=1)
        if self.left + 1 + self.right != self.total:
            raise ValidationError(f"split {self.left} + 1 + {self.right} != length {self.total}")

    @classmethod
    def head_first(cls, total: int) -> "HeadSplit":
        return cls(0, total - 1, total)

    @classmethod
    def head_last(cls, total: int) -> "HeadSplit":
        return cls(total - 1, 0, total)


@dataclass(frozen=True)
class InternalCosts:
    """Sums of dependency lengths inside S, V and O."""

    omega_s: float = 0
    omega_v: float = 0
    omega_o: float = 0

    def __post_init__(self):
        for name in ("omega_s", "omega_v", "omega_o"):
            check_real(getattr(self, name), name, non_negative=True)

    @property
    def total(self):
        return self.omega_s + self.omega_v + self.omega_o


def _nonneg(value, name):
    return check_int(value, name, min_value=0)


def _pos(value, name):
    return check_int(value, name, min_value=1)


def delta_sov(l_v: int, r_o: int, l_o: int, r_s: int) -> int:
    """``2 L_V + 2 R_O + L_O + R_S + 3`` for the order S O V."""
    l_v, r_o, l_o, r_s = (_nonneg(x, k) for x, k in ((l_v, "l_v"), (r_o, "r_o"), (l_o, "l_o"), (r_s, "r_s")))
    return 2 * l_v + 2 * r_o + l_o + r_s + 3


def delta_svo(r_s: int, v_len: int, l_o: int) -> int:
    """``R_S + |V| + L_O + 1`` for the order S V O; the verb's split cancels out."""
    r_s, l_o = _nonneg(r_s, "r_s"), _nonneg(l_o, "l_o")
    v_len = _pos(v_len, "v_len")
    return r_s + v_len + l_o + 1


def delta_sov_left(l_v: int, o_len: int) -> int:
    return 2 * _nonneg(l_v, "l_v") + _pos(o_len, "o_len") + 2


def delta_sov_right(l_v: int, o_len: int, s_len: int) -> int:
    return 2 * _nonneg(l_v, "l_v") + 2 * _pos(o_len, "o_len") + _pos(s_len, "s_len")


def delta_svo_left(v_len: int, o_len: int) -> int:
    return _pos(v_len, "v_len") + _pos(o_len, "o_len")


def delta_svo_right(v_len: int, s_len: int) -> int:
    return _pos(v_len, "v_len") + _pos(s_len, "s_len")


def _compare(left, right) -> Side:
    if left < right:
        return Side.LEFT
    if left > right:
        return Side.RIGHT
    return Side.TIE


def preferred_side(order, lengths: ConstituentLengths) -> Side:
    """Side for nominal dependents that gives the shorter top-level ``delta``.

    SOV never prefers the right; SVO prefers the side facing away from the
    longer of S and O.
    """
    order = WordOrder(order)
    if order is WordOrder.SOV:
        # l_v cancels in the comparison
        return _compare(delta_sov_left(0, lengths.o), delta_sov_right(0, lengths.o, lengths.s))
    if order is WordOrder.SVO:
        return _compare(delta_svo_left(lengths.v, lengths.o), delta_svo_right(lengths.v, lengths.s))
    raise DomainError(f"left/right calculus covers SOV and SVO only, got {order}")


def omega_total(internal: InternalCosts, delta) -> float:
    check_real(delta, "delta", non_negative=True)
    return internal.total + delta


@dataclass(frozen=True)
class RegressionComparison:
    omega_sov_from_left: float
    omega_sov_from_right: float
    harder_from: Side
    gap: float
    conservation_holds: bool


def regression_comparison(
    internal_left: InternalCosts,
    internal_right: InternalCosts,
    lengths: ConstituentLengths,
    l_v: int = 0,
) -> RegressionComparison:
    """Cost of turning SVO into SOV by reordering only the top-level constituents.

    ``internal_left``/``internal_right`` are the internal costs of the SVO
    language with nominal dependents before/after the noun; they carry over
    unchanged to SOV.  ``harder_from`` names the SVO variant whose SOV
    counterpart has the larger top-level cost.  When the two internal sums
    differ a :class:`ConservationWarning` is issued and the comparison is
    still returned.
    """
    l_v = _nonneg(l_v, "l_v")
    d_left = delta_sov_left(l_v, lengths.o)
    d_right = delta_sov_right(l_v, lengths.o, lengths.s)
    from_left = omega_total(internal_left, d_left)
    from_right = omega_total(internal_right, d_right)
    holds = math.isclose(internal_left.total, internal_right.total, rel_tol=0, abs_tol=1e-12)
    if not holds:
        warnings.warn(
            f"internal cost sums differ ({internal_left.total} vs {internal_right.total}); "
            "total-cost difference no longer reduces to the top-level difference",
            ConservationWarning,
            stacklevel=2,
        )
    harder = {Side.LEFT: Side.RIGHT, Side.RIGHT: Side.LEFT, Side.TIE: Side.TIE}[_compare(d_left, d_right)]
    return RegressionComparison(from_left, from_right, harder, from_right - from_left, holds)


@dataclass(frozen=True)
class LengthDistribution:
    """Finite distribution over constituent lengths."""

    support: tuple[tuple[int, float], ...]

    def __post_init__(self):
        support = tuple(
            (check_int(k, "length", min_value=1), check_real(p, "probability", positive=True))
            for k, p in self.support
        )
        object.__setattr__(self, "support", support)
        if not support:
            raise DomainError("distribution has empty support")
        if abs(sum(p for _, p in support) - 1) > 1e-12:
            raise ValidationError(f"probabilities sum to {sum(p for _, p in support)}, not 1")

    @classmethod
    def point(cls, length: int) -> "LengthDistribution":
        return cls(((length, 1),))

    @classmethod
    def uniform(cls, lengths: Sequence[int]) -> "LengthDistribution":
        lengths = list(lengths)
        return cls(tuple((k, Fraction(1, len(lengths))) for k in lengths))

    @property
    def mean(self):
        return sum(k * p for k, p in self.support)


def expected_delta_svo(dist_s: LengthDistribution, dist_o: LengthDistribution, dist_v: LengthDistribution, side) -> float:
    """Expected SVO ``delta`` when S, O and V lengths are random.

    Left gives ``E|V| + E|O|``, right gives ``E|V| + E|S|``.
    """
    side = Side(side)
    if side is Side.LEFT:
        return dist_v.mean + dist_o.mean
    if side is Side.RIGHT:
        return dist_v.mean + dist_s.mean
    raise DomainError("side must be left or right")


def layout_delta(order, s: HeadSplit, v: HeadSplit, o: HeadSplit) -> int:
    """Top-level delta from an explicit word layout.

    Constituents are laid out contiguously in ``order``; each head sits after
    ``left`` words of its constituent.  Returns the summed distance from the
    verb head to the subject and object heads.  Independent of the closed
    forms above, for checking them.
    """
    order = WordOrder(order)
    splits = {"S": s, "V": v, "O": o}
    heads = {}
    cursor = 1
    for label in order.value:
        split = splits[label]
        heads[label] = cursor + split.left
        cursor += split.total
    return abs(heads["V"] - heads["S"]) + abs(heads["V"] - heads["O"])
