"""Orderings of subject, verb and object and the adjacent-swap ring.

Two orders are neighbours when one becomes the other by swapping two
adjacent constituents.  The six orders then form a single 6-cycle.  The
clockwise direction is fixed by taking SOV -> SVO as the first step.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .exceptions import DatasetError, DomainError, ValidationError

__all__ = [
    "WordOrder",
    "CLOCKWISE_CHAIN",
    "swap_neighbors",
    "ring_edges",
    "ring_distance",
    "clockwise_distance_from_sov",
    "FrequencyTable",
    "PlacementRow",
    "verb_placement_summary",
    "load_frequency_table",
    "bundled_frequency_table",
    "BUNDLED_DATASET",
]


class WordOrder(str, enum.Enum):
    SOV = "SOV"
    SVO = "SVO"
    VSO = "VSO"
    VOS = "VOS"
    OVS = "OVS"
    OSV = "OSV"

    def __str__(self):
        return self.value

    @property
    def verb_position(self) -> int:
        """1-based slot of V: 1 initial, 2 central, 3 final."""
        return self.value.index("V") + 1

    @classmethod
    def parse(cls, text: str) -> "WordOrder":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise DomainError(f"unknown word order {text!r}") from None


CLOCKWISE_CHAIN: tuple[WordOrder, ...] = (
    WordOrder.SOV,
    WordOrder.SVO,
    WordOrder.VSO,
    WordOrder.VOS,
    WordOrder.OVS,
    WordOrder.OSV,
)


def swap_neighbors(w: WordOrder) -> frozenset[WordOrder]:
    """Orders reachable from ``w`` by one adjacent transposition."""
    s = WordOrder(w).value
    out = set()
    for i in range(len(s) - 1):
        out.add(WordOrder(s[:i] + s[i + 1] + s[i] + s[i + 2 :]))
    return frozenset(out)


def ring_edges() -> frozenset[frozenset[WordOrder]]:
    return frozenset(frozenset((w, v)) for w in WordOrder for v in swap_neighbors(w))


def ring_distance(a: WordOrder, b: WordOrder) -> int:
    """Fewest adjacent swaps turning ``a`` into ``b`` (breadth-first search)."""
    a, b = WordOrder(a), WordOrder(b)
    dist = {a: 0}
    queue = deque([a])
    while queue:
        w = queue.popleft()
        if w == b:
            return dist[w]
        for v in swap_neighbors(w):
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    raise AssertionError("ring is connected")  # pragma: no cover


def clockwise_distance_from_sov(w: WordOrder) -> int:
    return CLOCKWISE_CHAIN.index(WordOrder(w))


@dataclass(frozen=True)
class FrequencyTable:
    """Number of languages per dominant word order."""

    counts: Mapping[WordOrder, int]
    source: str | None = None

    def __post_init__(self):
        counts = {}
        for key, value in dict(self.counts).items():
            order = WordOrder.parse(key) if isinstance(key, str) else WordOrder(key)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValidationError(f"count for {order} must be a non-negative integer, got {value!r}")
            counts[order] = value
        object.__setattr__(self, "counts", counts)

    def __getitem__(self, order) -> int:
        return self.counts[WordOrder(order)]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def missing(self) -> list[WordOrder]:
        return [w for w in CLOCKWISE_CHAIN if w not in self.counts]

    def by_clockwise_distance(self) -> list[tuple[WordOrder, int, int]]:
        """``(order, clockwise distance, count)`` along the chain from SOV."""
        self._require_complete()
        return [(w, i, self.counts[w]) for i, w in enumerate(CLOCKWISE_CHAIN)]

    def _require_complete(self):
        missing = self.missing()
        if missing:
            raise ValidationError("frequency table lacks " + ", ".join(map(str, missing)))


def load_frequency_table(path) -> FrequencyTable:
    """Parse an ``ORDER<TAB>COUNT`` file; ``#`` lines are comments."""
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return _parse_lines(fh, source=str(path))


def _parse_lines(lines: Iterable[str], source: str | None = None) -> FrequencyTable:
    counts: dict[WordOrder, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise DatasetError(f"expected ORDER<TAB>COUNT, got {line!r}", lineno)
        name, count = fields[0].strip(), fields[1].strip()
        try:
            order = WordOrder(name)
        except ValueError:
            raise DatasetError(f"unknown word order {name!r}", lineno) from None
        if order in counts:
            raise DatasetError(f"duplicate entry for {order}", lineno)
        if not count.isdigit():
            raise DatasetError(f"count must be a non-negative integer, got {count!r}", lineno)
        counts[order] = int(count)
    table = FrequencyTable(counts, source=source)
    missing = table.missing()
    if missing:
        raise DatasetError("dataset lacks " + ", ".join(map(str, missing)))
    return table


BUNDLED_DATASET = "dryer_word_order.tsv"


def bundled_frequency_table() -> FrequencyTable:
    """The language counts shipped with the package (WALS, Dryer 2011)."""
    ref = resources.files(__package__).joinpath("data", BUNDLED_DATASET)
    with ref.open(encoding="utf-8") as fh:
        return _parse_lines(fh, source=BUNDLED_DATASET)


@dataclass(frozen=True)
class PlacementRow:
    verb_position: int
    orders: tuple[WordOrder, ...]
    count: int
    percentage: Decimal | None


def _percent(count: int, total: int) -> Decimal | None:
    if total == 0:
        return None
    value = Decimal(count) * 100 / Decimal(total)
    return value.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP)


def verb_placement_summary(f: FrequencyTable) -> tuple[list[PlacementRow], int]:
    """Languages grouped by verb slot (initial, central, final).

    Percentages carry one decimal; they are ``None`` when the table is empty.
    """
    f._require_complete()
    total = f.total
    rows = []
    for slot in (1, 2, 3):
        orders = tuple(w for w in CLOCKWISE_CHAIN if w.verb_position == slot)
        count = sum(f[w] for w in orders)
        rows.append(PlacementRow(slot, orders, count, _percent(count, total)))
    return rows, total
