"""Rank and product-moment correlation with two-sided significance tests.

Spearman's test here is exact: the null distribution comes from enumerating
every permutation of the second coordinate, which is feasible for n <= 8.
Pearson's test uses the usual t statistic with n - 2 degrees of freedom.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from scipy.special import betainc

from ._validation import check_paired
from .exceptions import DomainError

__all__ = [
    "PairedSample",
    "rank",
    "spearman_rho",
    "spearman_exact_pvalue",
    "pearson_r",
    "pearson_pvalue",
    "pearson_test",
    "PearsonTest",
    "t_two_sided_pvalue",
    "MAX_EXACT_N",
]

MAX_EXACT_N = 8


@dataclass(frozen=True)
class PairedSample:
    xs: tuple
    ys: tuple

    def __post_init__(self):
        xs, ys = check_paired(self.xs, self.ys)
        object.__setattr__(self, "xs", tuple(xs))
        object.__setattr__(self, "ys", tuple(ys))

    @property
    def n(self) -> int:
        return len(self.xs)


def rank(values: Sequence) -> list[Fraction]:
    """1-based ranks; tied values share the average of their ranks."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [Fraction(0)] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = Fraction(i + j + 2, 2)
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _correlation(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    return sxy, sxx, syy


def _spearman_exact(rx, ry) -> Fraction | None:
    # rho squared times sign, kept rational so |rho| comparisons are exact
    sxy, sxx, syy = _correlation(rx, ry)
    if sxx == 0 or syy == 0:
        return None
    return sxy * abs(sxy) / (sxx * syy)


def spearman_rho(xs, ys) -> float | None:
    """Spearman's rank correlation, or ``None`` if either ranking is constant."""
    xs, ys = check_paired(xs, ys)
    signed_sq = _spearman_exact(rank(xs), rank(ys))
    if signed_sq is None:
        return None
    return math.copysign(math.sqrt(abs(signed_sq)), signed_sq)


def spearman_exact_pvalue(xs, ys) -> float:
    """Two-sided exact permutation p-value for Spearman's rho.

    Counts the permutations of ``ys`` whose ``|rho|`` is at least the
    observed one, over all ``n!`` permutations.
    """
    xs, ys = check_paired(xs, ys, min_size=3)
    n = len(xs)
    if n > MAX_EXACT_N:
        raise DomainError(f"exact test enumerates n! permutations; n={n} exceeds {MAX_EXACT_N}")
    if len(set(xs)) != n or len(set(ys)) != n:
        raise DomainError("exact test requires samples without ties")
    # Without ties rho = 1 - 6 S / (n^3 - n), S the sum of squared rank
    # differences, so |rho| is compared exactly via |n^3 - n - 6 S|.
    rx = [int(r) for r in rank(xs)]
    ry = [int(r) for r in rank(ys)]
    scale = n ** 3 - n

    def spread(perm):
        return abs(scale - 6 * sum((a - b) ** 2 for a, b in zip(rx, perm)))

    observed = spread(ry)
    hits = 0
    total = 0
    for perm in itertools.permutations(ry):
        total += 1
        if spread(perm) >= observed:
            hits += 1
    return hits / total


def pearson_r(xs, ys) -> float | None:
    """Product-moment correlation, or ``None`` if either coordinate is constant."""
    xs, ys = check_paired(xs, ys)
    xs = [float(x) for x in xs]
    ys = [float(y) for y in ys]
    sxy, sxx, syy = _correlation(xs, ys)
    if sxx == 0 or syy == 0:
        return None
    r = sxy / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def t_two_sided_pvalue(t: float, df: int) -> float:
    """``P(|T| >= |t|)`` for Student's t with ``df`` degrees of freedom."""
    if df < 1:
        raise DomainError(f"degrees of freedom must be >= 1, got {df}")
    if math.isinf(t):
        return 0.0
    return float(betainc(df / 2, 0.5, df / (df + t * t)))


@dataclass(frozen=True)
class PearsonTest:
    """Outcome of the t test; ``degenerate`` marks ``|r| == 1``, where t is
    infinite and the p-value is reported as its limit 0."""

    r: float
    statistic: float
    df: int
    pvalue: float
    degenerate: bool


def pearson_test(xs, ys) -> PearsonTest:
    xs, ys = check_paired(xs, ys, min_size=3)
    r = pearson_r(xs, ys)
    if r is None:
        raise DomainError("Pearson correlation undefined: a coordinate has zero variance")
    df = len(xs) - 2
    if abs(r) == 1.0:
        return PearsonTest(r, math.copysign(math.inf, r), df, 0.0, True)
    t = r * math.sqrt(df / (1 - r * r))
    return PearsonTest(r, t, df, t_two_sided_pvalue(t, df), False)


def pearson_pvalue(xs, ys) -> float:
    """Two-sided p-value of the t test for zero Pearson correlation."""
    return pearson_test(xs, ys).pvalue
