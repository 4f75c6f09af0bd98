import itertools

import pytest

from headplacement.cost_core import (
    Affine,
    Exponential,
    Identity,
    Power,
    Table,
    landscape,
    optimal_placements,
    star_extremes_identity,
    total_cost,
    worst_placements,
)
from headplacement.exceptions import DomainError, ValidationError
from headplacement.mla_oracle import (
    MAX_STORED,
    Arrangement,
    TreeInstance,
    all_arrangements,
    arrangement_cost,
    crossing_count,
    enumerate_extremes,
    extreme_hub_positions,
    hub_position_costs,
)

BUILTINS = [Identity(), Power(2), Power(0.5), Exponential(2), Affine(3, 1)]


class TestTreeInstance:
    def test_star(self):
        t = TreeInstance.star(3)
        assert t.vertex_count == 4
        assert t.edges == ((0, 1), (0, 2), (0, 3))
        assert t.hub == 0

    def test_path_has_no_hub_beyond_three(self):
        assert TreeInstance.path(4).hub is None
        assert TreeInstance.path(3).hub == 1

    @pytest.mark.parametrize(
        "N, edges",
        [
            (3, [(0, 1)]),                  # too few edges
            (4, [(0, 1), (1, 0), (2, 3)]),  # duplicate edge, disconnected
            (4, [(0, 1), (1, 2), (0, 2)]),  # cycle leaves vertex 3 out
            (3, [(0, 0), (1, 2)]),          # self loop
            (3, [(0, 1), (1, 5)]),          # vertex out of range
        ],
    )
    def test_rejects_non_trees(self, N, edges):
        with pytest.raises(ValidationError):
            TreeInstance(N, tuple(edges))


class TestArrangement:
    def test_bijection(self):
        with pytest.raises(ValidationError):
            Arrangement((1, 1, 3))
        with pytest.raises(ValidationError):
            Arrangement((0, 1, 2))

    def test_order_round_trip(self):
        a = Arrangement.from_order([2, 0, 1])
        assert a.positions == (2, 3, 1)
        assert a.order == (2, 0, 1)


class TestArrangementCost:
    def test_star_head_first(self):
        assert arrangement_cost(TreeInstance.star(3), Arrangement((1, 2, 3, 4)), Identity()) == 6

    def test_single_edge(self):
        t = TreeInstance.path(2)
        for a in all_arrangements(2):
            assert arrangement_cost(t, a, Identity()) == 1

    def test_star_hub_third_power(self):
        a = Arrangement((3, 1, 2, 4, 5))
        assert arrangement_cost(TreeInstance.star(4), a, Power(2)) == 10 == total_cost(4, 3, Power(2))

    def test_size_mismatch(self):
        with pytest.raises(DomainError):
            arrangement_cost(TreeInstance.star(3), Arrangement((1, 2, 3)), Identity())

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("g", BUILTINS)
    def test_star_cost_depends_only_on_hub(self, n, g):
        tree = TreeInstance.star(n)
        by_hub = {}
        for a in all_arrangements(n + 1):
            by_hub.setdefault(a.positions[0], set()).add(arrangement_cost(tree, a, g))
        for hub_pos, costs in by_hub.items():
            # float families may differ in the last bits by summation order
            assert max(costs) - min(costs) <= 1e-9
            assert min(costs) == pytest.approx(total_cost(n, hub_pos, g))


class TestEnumerateExtremes:
    def test_star3(self):
        r = enumerate_extremes(TreeInstance.star(3), Identity())
        assert (r.min_cost, r.max_cost) == (4, 6)
        assert r.min_hub_positions == (2, 3)
        assert r.max_hub_positions == (1, 4)

    def test_star2(self):
        r = enumerate_extremes(TreeInstance.star(2), Identity())
        assert (r.min_cost, r.max_cost) == (2, 3)
        assert r.min_hub_positions == (2,)
        # hub central: two leaf orders; hub at either end: 2 * 2 arrangements
        assert r.min_count == 2 and r.max_count == 4
        assert {a.positions[0] for a in r.min_arrangements} == {2}

    def test_matches_python_enumeration(self):
        t = TreeInstance(5, ((0, 1), (1, 2), (1, 3), (3, 4)))
        g = Power(2)
        costs = [arrangement_cost(t, a, g) for a in all_arrangements(5)]
        r = enumerate_extremes(t, g)
        assert r.min_cost == min(costs) and r.max_cost == max(costs)
        assert r.min_count == costs.count(min(costs))
        assert r.min_hub_positions is None

    def test_size_guard(self):
        with pytest.raises(DomainError):
            enumerate_extremes(TreeInstance.star(9), Identity())

    def test_short_table(self):
        with pytest.raises(DomainError):
            enumerate_extremes(TreeInstance.star(4), Table((1, 2, 3)))

    def test_truncation_flag(self):
        # star(7): 2 central (or 2 end) hub positions x 7! leaf orders = 10080
        r = enumerate_extremes(TreeInstance.star(7), Identity())
        assert r.min_count == r.max_count == 10080
        assert r.min_truncated and len(r.min_arrangements) == MAX_STORED
        r = enumerate_extremes(TreeInstance.star(6), Identity())
        assert r.min_count == 720 and not r.min_truncated

    @pytest.mark.parametrize("n", range(2, 9))
    @pytest.mark.parametrize("g", BUILTINS, ids=lambda g: g.spec())
    def test_oracle_agrees_with_center_rule(self, n, g):
        r = enumerate_extremes(TreeInstance.star(n), g)
        land = landscape(n, g)
        assert r.min_cost == pytest.approx(min(land.costs), rel=1e-12)
        assert r.max_cost == pytest.approx(max(land.costs), rel=1e-12)
        assert r.min_hub_positions == optimal_placements(n, g)
        assert r.max_hub_positions == worst_placements(n, g)

    @pytest.mark.parametrize("N", range(3, 9))
    def test_closed_form_extremes(self, N):
        r = enumerate_extremes(TreeInstance.star(N - 1), Identity())
        assert (r.max_cost, r.min_cost) == star_extremes_identity(N)


class TestHubPositions:
    def test_costs(self):
        assert hub_position_costs(3, Identity()) == {1: 6, 2: 4, 3: 4, 4: 6}

    @pytest.mark.parametrize("n", [8, 12, 20])
    def test_extremes_beyond_enumeration(self, n):
        assert extreme_hub_positions(n, Exponential(2)) == (optimal_placements(n), worst_placements(n))


class TestCrossings:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_stars_never_cross(self, n):
        t = TreeInstance.star(n)
        assert all(crossing_count(t, a) == 0 for a in all_arrangements(n + 1))

    def test_interleaved_path(self):
        # path a-b-c-d laid out as a, c, b, d
        t = TreeInstance.path(4)
        assert crossing_count(t, Arrangement.from_order([0, 2, 1, 3])) == 1

    def test_path_in_order(self):
        t = TreeInstance.path(6)
        assert crossing_count(t, Arrangement(tuple(range(1, 7)))) == 0

    def test_brute_force_definition(self):
        t = TreeInstance(6, ((0, 1), (0, 2), (2, 3), (2, 4), (4, 5)))
        for a in all_arrangements(6):
            p = a.positions
            expected = 0
            for (u, v), (x, y) in itertools.combinations(t.edges, 2):
                if len({u, v, x, y}) < 4:
                    continue
                i, j = sorted((p[u], p[v]))
                k, m = sorted((p[x], p[y]))
                expected += (i < k < j < m) or (k < i < m < j)
            assert crossing_count(t, a) == expected
