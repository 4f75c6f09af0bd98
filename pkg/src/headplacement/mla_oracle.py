"""Exhaustive linear arrangements of small trees.

Used as an independent check on the closed-form results in
:mod:`headplacement.cost_core`: every arrangement of the tree's vertices is
enumerated and scored, no formula involved.
"""
from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._validation import check_int
from .cost_core import CostFunction, costs_close, eval_cost
from .exceptions import DomainError, ValidationError

__all__ = [
    "TreeInstance",
    "Arrangement",
    "ExtremesResult",
    "arrangement_cost",
    "enumerate_extremes",
    "hub_position_costs",
    "extreme_hub_positions",
    "crossing_count",
    "all_arrangements",
    "MAX_VERTICES",
    "MAX_STORED",
]

MAX_VERTICES = 9
MAX_STORED = 10_000


@dataclass(frozen=True)
class TreeInstance:
    """Undirected tree on vertices ``0 .. vertex_count - 1``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        N = check_int(self.vertex_count, "vertex_count", min_value=2)
        edges = tuple(tuple(sorted((int(u), int(v)))) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) != N - 1:
            raise ValidationError(f"a tree on {N} vertices needs {N - 1} edges, got {len(edges)}")
        adjacency = {v: [] for v in range(N)}
        for u, v in edges:
            if not (0 <= u < N and 0 <= v < N) or u == v:
                raise ValidationError(f"invalid edge ({u}, {v})")
            adjacency[u].append(v)
            adjacency[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        if len(seen) != N:
            raise ValidationError("edges do not connect all vertices")

    @classmethod
    def star(cls, n: int) -> "TreeInstance":
        """Hub 0 joined to leaves ``1 .. n``."""
        n = check_int(n, "n", min_value=1)
        return cls(n + 1, tuple((0, i) for i in range(1, n + 1)))

    @classmethod
    def path(cls, N: int) -> "TreeInstance":
        N = check_int(N, "N", min_value=2)
        return cls(N, tuple((i, i + 1) for i in range(N - 1)))

    @property
    def hub(self) -> int | None:
        """The center vertex when the tree is a star with at least two leaves."""
        if self.vertex_count < 3:
            return None
        degree = [0] * self.vertex_count
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        for vertex, deg in enumerate(degree):
            if deg == self.vertex_count - 1:
                return vertex
        return None


@dataclass(frozen=True)
class Arrangement:
    """Bijection from vertices to positions; ``positions[v]`` is in ``1 .. N``."""

    positions: tuple[int, ...]

    def __post_init__(self):
        positions = tuple(int(p) for p in self.positions)
        object.__setattr__(self, "positions", positions)
        if sorted(positions) != list(range(1, len(positions) + 1)):
            raise ValidationError(f"not a bijection onto 1..{len(positions)}: {positions}")

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Arrangement":
        """Arrangement that lists vertices left to right in ``order``."""
        positions = [0] * len(order)
        for pos, vertex in enumerate(order, start=1):
            positions[vertex] = pos
        return cls(tuple(positions))

    @property
    def order(self) -> tuple[int, ...]:
        out = [0] * len(self.positions)
        for vertex, pos in enumerate(self.positions):
            out[pos - 1] = vertex
        return tuple(out)

    def __len__(self):
        return len(self.positions)


def _check_match(t: TreeInstance, a: Arrangement) -> None:
    if len(a) != t.vertex_count:
        raise DomainError(f"arrangement has {len(a)} positions, tree has {t.vertex_count} vertices")


def arrangement_cost(t: TreeInstance, a: Arrangement, g: CostFunction):
    """Sum of ``g(|pos(u) - pos(v)|)`` over the tree's edges."""
    _check_match(t, a)
    p = a.positions
    return sum(eval_cost(g, abs(p[u] - p[v])) for u, v in t.edges)


def all_arrangements(N: int) -> Iterable[Arrangement]:
    for perm in itertools.permutations(range(1, N + 1)):
        yield Arrangement(perm)


@functools.lru_cache(maxsize=MAX_VERTICES)
def _permutation_matrix(N: int) -> np.ndarray:
    # Row r is positions[v] of the r-th arrangement, lexicographic order.
    matrix = np.array(list(itertools.permutations(range(1, N + 1))), dtype=np.int64)
    matrix.setflags(write=False)
    return matrix


def _cost_lookup(g: CostFunction, N: int) -> np.ndarray:
    values = [eval_cost(g, d) for d in range(1, N)]
    dtype = np.int64 if all(isinstance(v, int) for v in values) else np.float64
    # index 0 is unused: no edge has length 0
    return np.array([0] + values, dtype=dtype)


@dataclass(frozen=True)
class ExtremesResult:
    """Extreme costs over every arrangement of a tree.

    Stored arrangement lists stop at ``MAX_STORED`` entries; the ``*_truncated``
    flags report whether that happened.  Hub position sets are complete and
    only filled in for star trees.
    """

    min_cost: float
    min_arrangements: tuple[Arrangement, ...]
    min_truncated: bool
    min_count: int
    max_cost: float
    max_arrangements: tuple[Arrangement, ...]
    max_truncated: bool
    max_count: int
    min_hub_positions: tuple[int, ...] | None = None
    max_hub_positions: tuple[int, ...] | None = None


def _as_scalar(x):
    return x.item() if hasattr(x, "item") else x


def enumerate_extremes(t: TreeInstance, g: CostFunction) -> ExtremesResult:
    """Minimum and maximum arrangement cost of ``t`` by full enumeration.

    Refuses trees with more than ``MAX_VERTICES`` vertices.
    """
    N = t.vertex_count
    if N > MAX_VERTICES:
        raise DomainError(f"enumeration limited to {MAX_VERTICES} vertices, tree has {N}")
    if g.d_max is not None and g.d_max < N - 1:
        raise DomainError(f"cost function defined up to d={g.d_max}, tree needs d up to {N - 1}")
    perms = _permutation_matrix(N)
    lookup = _cost_lookup(g, N)
    us = np.array([u for u, _ in t.edges])
    vs = np.array([v for _, v in t.edges])
    lengths = np.abs(perms[:, us] - perms[:, vs])
    costs = lookup[lengths].sum(axis=1)

    low = _as_scalar(costs.min())
    high = _as_scalar(costs.max())
    if costs.dtype.kind == "f":
        scale = max(abs(low), abs(high), 1.0)
        tol = max(1e-9, 1e-12 * scale)
        min_mask = costs <= low + tol
        max_mask = costs >= high - tol
    else:
        min_mask = costs == low
        max_mask = costs == high

    hub = t.hub
    min_hubs = max_hubs = None
    if hub is not None:
        min_hubs = tuple(sorted(set(perms[min_mask, hub].tolist())))
        max_hubs = tuple(sorted(set(perms[max_mask, hub].tolist())))

    def stored(mask):
        rows = np.flatnonzero(mask)
        kept = rows[:MAX_STORED]
        return tuple(Arrangement(tuple(perms[r].tolist())) for r in kept), len(rows) > MAX_STORED, len(rows)

    min_arr, min_trunc, min_count = stored(min_mask)
    max_arr, max_trunc, max_count = stored(max_mask)
    return ExtremesResult(
        min_cost=low,
        min_arrangements=min_arr,
        min_truncated=min_trunc,
        min_count=min_count,
        max_cost=high,
        max_arrangements=max_arr,
        max_truncated=max_trunc,
        max_count=max_count,
        min_hub_positions=min_hubs,
        max_hub_positions=max_hubs,
    )


def hub_position_costs(n: int, g: CostFunction) -> dict[int, object]:
    """Arrangement cost of ``star(n)`` for each hub position.

    Leaves fill the remaining positions in index order; a star's cost depends
    only on where the hub sits, so one arrangement per hub position suffices.
    Scales to stars too large for :func:`enumerate_extremes`.
    """
    tree = TreeInstance.star(n)
    out = {}
    for hub_pos in range(1, n + 2):
        leaves = [p for p in range(1, n + 2) if p != hub_pos]
        out[hub_pos] = arrangement_cost(tree, Arrangement((hub_pos, *leaves)), g)
    return out


def extreme_hub_positions(n: int, g: CostFunction) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimizing and maximizing hub positions from :func:`hub_position_costs`."""
    costs = hub_position_costs(n, g)
    low = min(costs.values())
    high = max(costs.values())
    mins = tuple(sorted(p for p, c in costs.items() if costs_close(c, low)))
    maxs = tuple(sorted(p for p, c in costs.items() if costs_close(c, high)))
    return mins, maxs


def crossing_count(t: TreeInstance, a: Arrangement) -> int:
    """Number of edge pairs whose position intervals strictly interleave.

    Pairs sharing an endpoint never cross.
    """
    _check_match(t, a)
    p = a.positions
    spans = [tuple(sorted((p[u], p[v]))) for u, v in t.edges]
    count = 0
    for (a1, b1), (a2, b2) in itertools.combinations(spans, 2):
        if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
            count += 1
    return count
