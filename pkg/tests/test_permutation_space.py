from decimal import Decimal

import pytest

from headplacement.exceptions import DatasetError, DomainError, ValidationError
from headplacement.permutation_space import (
    CLOCKWISE_CHAIN,
    FrequencyTable,
    WordOrder,
    bundled_frequency_table,
    clockwise_distance_from_sov,
    load_frequency_table,
    ring_distance,
    ring_edges,
    swap_neighbors,
    verb_placement_summary,
)

W = WordOrder

EXPECTED_EDGES = {
    frozenset(p)
    for p in [(W.SOV, W.SVO), (W.SVO, W.VSO), (W.VSO, W.VOS), (W.VOS, W.OVS), (W.OVS, W.OSV), (W.OSV, W.SOV)]
}


def test_six_orders():
    assert {w.value for w in WordOrder} == {"SOV", "SVO", "VSO", "VOS", "OVS", "OSV"}


class TestSwapNeighbors:
    def test_sov(self):
        assert swap_neighbors(W.SOV) == {W.SVO, W.OSV}

    def test_svo(self):
        assert swap_neighbors(W.SVO) == {W.SOV, W.VSO}

    def test_two_steps_cover_everything_from_anywhere(self):
        for w in WordOrder:
            orbit = {w}
            for _ in range(3):
                orbit |= {v for u in orbit for v in swap_neighbors(u)}
            assert orbit == set(WordOrder)


class TestRing:
    def test_edge_set(self):
        assert ring_edges() == EXPECTED_EDGES

    def test_single_cycle(self):
        assert all(len(swap_neighbors(w)) == 2 for w in WordOrder)
        # walk the cycle without stepping back
        prev, cur, seen = None, W.SOV, [W.SOV]
        while True:
            nxt = next(v for v in sorted(swap_neighbors(cur)) if v != prev)
            if nxt == W.SOV:
                break
            seen.append(nxt)
            prev, cur = cur, nxt
        assert len(seen) == 6

    def test_distances(self):
        assert ring_distance(W.SOV, W.SVO) == 1
        assert ring_distance(W.SOV, W.OVS) == 2
        assert ring_distance(W.SVO, W.OVS) == 3
        assert ring_distance(W.VOS, W.VOS) == 0

    def test_clockwise(self):
        assert clockwise_distance_from_sov(W.SOV) == 0
        assert clockwise_distance_from_sov(W.SVO) == 1
        assert clockwise_distance_from_sov(W.OSV) == 5
        assert list(CLOCKWISE_CHAIN) == [W.SOV, W.SVO, W.VSO, W.VOS, W.OVS, W.OSV]

    def test_chain_follows_ring_edges(self):
        for i, w in enumerate(CLOCKWISE_CHAIN):
            assert CLOCKWISE_CHAIN[(i + 1) % 6] in swap_neighbors(w)

    @pytest.mark.parametrize("a", list(WordOrder))
    @pytest.mark.parametrize("b", list(WordOrder))
    def test_metric_consistency(self, a, b):
        k = abs(CLOCKWISE_CHAIN.index(a) - CLOCKWISE_CHAIN.index(b))
        assert ring_distance(a, b) == min(k, 6 - k) == ring_distance(b, a)


class TestDataset:
    def test_bundled_counts(self):
        f = bundled_frequency_table()
        assert f[W.SOV] + f[W.OSV] == 569
        assert f[W.SVO] + f[W.OVS] == 499
        assert f[W.VSO] + f[W.VOS] == 120
        assert (f[W.SVO], f[W.OVS], f[W.OSV], f[W.SOV]) == (488, 11, 4, 565)
        assert f.total == 1188

    def test_dataset_dependent_split(self):
        # VSO/VOS split comes from the external typology source only
        f = bundled_frequency_table()
        assert (f[W.VSO], f[W.VOS]) == (95, 25)

    def test_strict_decrease_clockwise(self):
        counts = [c for _, _, c in bundled_frequency_table().by_clockwise_distance()]
        assert all(a > b for a, b in zip(counts, counts[1:]))

    def test_load_round_trip(self, tmp_path):
        path = tmp_path / "counts.tsv"
        path.write_text("# comment\nSOV\t3\nSVO\t2\n\nVSO\t1\nVOS\t0\nOVS\t5\nOSV\t4\n", encoding="utf-8")
        f = load_frequency_table(path)
        assert f[W.OVS] == 5 and f.total == 15

    @pytest.mark.parametrize(
        "body, lineno",
        [
            ("SOV\t1\nSOV\t2\n", 2),
            ("SOV 1\n", 1),
            ("XYZ\t1\n", 1),
            ("# c\nSOV\t-1\n", 2),
            ("SOV\tten\n", 1),
        ],
    )
    def test_malformed_names_line(self, tmp_path, body, lineno):
        path = tmp_path / "bad.tsv"
        path.write_text(body, encoding="utf-8")
        with pytest.raises(DatasetError) as info:
            load_frequency_table(path)
        assert info.value.lineno == lineno
        assert f"line {lineno}" in str(info.value)

    def test_missing_order(self, tmp_path):
        path = tmp_path / "short.tsv"
        path.write_text("SOV\t1\nSVO\t1\nVSO\t1\nVOS\t1\nOVS\t1\n", encoding="utf-8")
        with pytest.raises(DatasetError, match="OSV"):
            load_frequency_table(path)


class TestVerbPlacement:
    def test_bundled(self):
        rows, total = verb_placement_summary(bundled_frequency_table())
        assert [(r.count, r.percentage) for r in rows] == [
            (120, Decimal("10.1")),
            (499, Decimal("42.0")),
            (569, Decimal("47.9")),
        ]
        assert total == 1188

    def test_all_zero(self):
        rows, total = verb_placement_summary(FrequencyTable({w: 0 for w in WordOrder}))
        assert [r.count for r in rows] == [0, 0, 0]
        assert total == 0
        assert all(r.percentage is None for r in rows)

    def test_central_only(self):
        counts = {w: 0 for w in WordOrder}
        counts.update({W.SVO: 488, W.OVS: 11})
        rows, _ = verb_placement_summary(FrequencyTable(counts))
        assert rows[1].count == 499

    def test_missing_order(self):
        with pytest.raises(ValidationError):
            verb_placement_summary(FrequencyTable({W.SOV: 1}))

    def test_half_rounds_up(self):
        # 1/8 = 12.5% -> 12.5; 1/16 = 6.25% -> 6.3
        counts = {w: 0 for w in WordOrder}
        counts.update({W.VSO: 1, W.SOV: 15})
        rows, _ = verb_placement_summary(FrequencyTable(counts))
        assert rows[0].percentage == Decimal("6.3")

    def test_bad_counts(self):
        with pytest.raises(ValidationError):
            FrequencyTable({W.SOV: -1})
        with pytest.raises(DomainError):
            WordOrder.parse("XYZ")
