"""Product connectivity formulas, closed-form certificate families, lifting, hunts."""

import random

import pytest

from strongarc.constructions import (
    CLASS_TOKENS,
    ConstructionError,
    HuntConfig,
    all_connected_graphs,
    check_bounds,
    check_product_formula,
    check_symmetric_identity,
    class_digraph,
    class_table_value,
    cycle_bicycle_family,
    cycle_complete_family,
    cycle_cycle_family,
    cycle_tree_family,
    hunt_tightness,
    lift_certificates,
    product_lambda_formula,
    undirected_product_lambda,
)
from strongarc.digraph import DigraphError, biorient, from_arc_list, is_strong
from strongarc.generators import (
    TreeShape,
    bidirected_cycle,
    complete_digraph,
    directed_cycle,
    random_strong_digraph,
)
from strongarc.packing import lambda_2, verify_certificate
from strongarc.product import cartesian_product

# Bidirected K_{2,3} with parts {0, 3} and {1, 2, 4}: its pair-packing number
# is 2 but the pair (0, 3) packs 3 members, so factor families can have spares.
K23 = biorient(5, ((0, 1), (0, 2), (0, 4), (1, 3), (2, 3), (3, 4)))


class TestFormula:
    def test_cycle_square_breakdown(self):
        b = product_lambda_formula(directed_cycle(3), directed_cycle(3))
        assert b.value == 2
        assert (b.lambda_g, b.lambda_h) == (1, 1)
        assert (b.term_g_scaled, b.term_h_scaled, b.term_out, b.term_in) == (3, 3, 2, 2)
        assert b.argmin == ("out-degrees", "in-degrees")

    def test_scaled_term_wins_for_complete_factors(self):
        b = product_lambda_formula(complete_digraph(4), directed_cycle(5))
        # min(3*5, 1*4, 3+1, 3+1) = 4
        assert b.value == 4 and b.argmin == ("h-scaled", "out-degrees", "in-degrees")

    def test_rejects_non_strong_factor(self):
        with pytest.raises(DigraphError):
            product_lambda_formula(from_arc_list(3, [(0, 1), (1, 2)]), directed_cycle(3))

    def test_rejects_trivial_factor(self):
        with pytest.raises(DigraphError):
            product_lambda_formula(from_arc_list(1, []), directed_cycle(3))

    @pytest.mark.parametrize("seed", range(10))
    def test_formula_matches_flow_on_random_products(self, seed):
        rng = random.Random(seed)
        g = random_strong_digraph(rng.randint(2, 5), 0.3, rng.getrandbits(32))
        h = random_strong_digraph(rng.randint(2, 5), 0.3, rng.getrandbits(32))
        result = check_product_formula(g, h)
        assert result.holds and result.cut_ok
        assert result.computed == result.formula.value


class TestUndirectedFormula:
    def test_triangle_times_square(self):
        u = undirected_product_lambda(
            3, ((0, 1), (0, 2), (1, 2)), 4, ((0, 1), (1, 2), (2, 3), (3, 0))
        )
        # min(2*4, 2*3, 2+2) = 4
        assert u.value == 4 and u.argmin == ("degrees",)

    def test_rejects_disconnected(self):
        with pytest.raises(DigraphError):
            undirected_product_lambda(3, ((0, 1),), 2, ((0, 1),))


class TestSymmetricIdentity:
    def test_triangle_times_path(self):
        check = check_symmetric_identity(3, ((0, 1), (0, 2), (1, 2)), 3, ((0, 1), (1, 2)))
        assert check.holds
        assert check.undirected_value == check.directed_value == check.observed_lambda2 == 3

    def test_single_graph_identity(self):
        # the pair-packing number of a biorientation equals the graph's edge connectivity
        for edges, n in [
            (((0, 1), (1, 2), (2, 0)), 3),
            (((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)), 4),
        ]:
            b = biorient(n, edges)
            from strongarc.flow import arc_connectivity

            assert lambda_2(b).value == arc_connectivity(b).value


class TestAllConnectedGraphs:
    @pytest.mark.parametrize("n,count", [(2, 1), (3, 4), (4, 38)])
    def test_counts_match_known_sequence(self, n, count):
        graphs = all_connected_graphs(n)
        assert len(graphs) == count
        assert all(is_strong(biorient(n, edges)) for edges in graphs)

    def test_no_duplicates(self):
        graphs = all_connected_graphs(4)
        assert len(set(graphs)) == len(graphs)


class TestBounds:
    def test_cycle_square(self):
        r = check_bounds(directed_cycle(3), directed_cycle(3))
        assert (r.lower, r.observed, r.upper) == (1, 2, 2)
        assert r.sandwich_ok and r.upper_tight and not r.lower_tight

    def test_complete_square(self):
        r = check_bounds(complete_digraph(3), complete_digraph(3))
        assert (r.lower, r.observed, r.upper) == (3, 4, 4)
        assert r.sandwich_ok

    def test_skip_exact(self):
        r = check_bounds(complete_digraph(3), complete_digraph(3), compute_exact=False)
        assert (r.lower, r.upper) == (3, 4)
        assert r.observed is None and r.sandwich_ok is None


class TestClassTable:
    def test_full_grid(self):
        n, m = 4, 5
        grid = [[class_table_value(a, b, n, m) for b in CLASS_TOKENS] for a in CLASS_TOKENS]
        assert grid == [[2, 3, 2, 5], [3, 4, 3, 6], [2, 3, 2, 5], [4, 5, 4, 7]]

    def test_symmetry(self):
        for a in CLASS_TOKENS:
            for b in CLASS_TOKENS:
                assert class_table_value(a, b, 4, 5) == class_table_value(b, a, 5, 4)

    def test_order_minimum_enforced(self):
        with pytest.raises(DigraphError):
            class_table_value("cn", "bkm", 2, 3)
        with pytest.raises(DigraphError):
            class_table_value("bkm", "bcm", 3, 2)
        with pytest.raises(DigraphError):
            class_table_value("xyz", "cn", 3, 3)

    def test_entries_match_search_for_small_orders(self):
        for a in CLASS_TOKENS:
            for b in CLASS_TOKENS:
                n = max(3, 3)
                m = 3
                p = cartesian_product(class_digraph(a, n), class_digraph(b, m))
                assert lambda_2(p.digraph).value == class_table_value(a, b, n, m)

    def test_tree_entry_ignores_shape(self):
        for shape in [TreeShape("path", 4), TreeShape("star", 4), TreeShape("random", 4, seed=5)]:
            p = cartesian_product(class_digraph("btm", 4, tree=shape), directed_cycle(3))
            assert lambda_2(p.digraph).value == class_table_value("btm", "cn", 4, 3)

    def test_class_digraph_shapes(self):
        assert class_digraph("cn", 4).arcs == directed_cycle(4).arcs
        assert class_digraph("bkm", 3).arcs == complete_digraph(3).arcs
        with pytest.raises(DigraphError):
            class_digraph("btm", 4, tree=TreeShape("path", 5))


def assert_family(p, fam, expected_size, origins=("construction",)):
    assert len(fam.members) == expected_size
    assert fam.origin in origins
    assert verify_certificate(p.digraph, fam).valid


class TestClosedFormFamilies:
    def test_cycle_cycle_figure_instance(self):
        p, fam = cycle_cycle_family(4, 4, (0, 0), (1, 1))
        assert_family(p, fam, 2)
        e = p.encode
        first = {
            (e(0, 0), e(0, 1)), (e(0, 1), e(1, 1)), (e(1, 1), e(1, 2)), (e(1, 2), e(1, 3)),
            (e(1, 3), e(2, 3)), (e(2, 3), e(3, 3)), (e(3, 3), e(0, 3)), (e(0, 3), e(0, 0)),
        }
        second = {
            (e(0, 0), e(1, 0)), (e(1, 0), e(1, 1)), (e(1, 1), e(2, 1)), (e(2, 1), e(2, 2)),
            (e(2, 2), e(2, 3)), (e(2, 3), e(2, 0)), (e(2, 0), e(3, 0)), (e(3, 0), e(0, 0)),
        }
        assert set(fam.members[0]) == first
        assert set(fam.members[1]) == second

    @pytest.mark.parametrize("n,m", [(3, 3), (3, 5), (4, 4), (5, 3)])
    def test_cycle_cycle_general_positions(self, n, m):
        for r2 in range(1, n):
            for c2 in range(1, m):
                p, fam = cycle_cycle_family(n, m, (0, 0), (r2, c2))
                assert_family(p, fam, 2)

    def test_cycle_cycle_aligned_seeds_fall_back_to_search(self):
        p, fam = cycle_cycle_family(4, 4, (0, 0), (0, 2))
        assert_family(p, fam, 2, origins=("solver",))
        p, fam = cycle_cycle_family(4, 4, (0, 0), (2, 0))
        assert_family(p, fam, 2, origins=("solver",))

    @pytest.mark.parametrize("n,m", [(3, 3), (3, 4), (4, 5), (5, 3)])
    def test_cycle_bicycle_general_positions(self, n, m):
        for r2 in range(1, n):
            for c2 in range(1, m):
                p, fam = cycle_bicycle_family(n, m, (0, 0), (r2, c2))
                assert_family(p, fam, 3)

    @pytest.mark.parametrize(
        "shape",
        [TreeShape("path", 4), TreeShape("star", 4), TreeShape("random", 5, seed=3)],
    )
    def test_cycle_tree_general_positions(self, shape):
        n = 4
        for r2 in range(1, n):
            for c2 in range(1, shape.order):
                p, fam = cycle_tree_family(n, shape, (0, 0), (r2, c2))
                assert_family(p, fam, 2)

    @pytest.mark.parametrize("n,m", [(3, 2), (3, 3), (4, 4), (5, 3)])
    def test_cycle_complete_general_positions(self, n, m):
        for r2 in range(1, n):
            for c2 in range(1, m):
                p, fam = cycle_complete_family(n, m, (0, 0), (r2, c2))
                assert_family(p, fam, m)

    def test_family_sizes_are_the_packing_numbers(self):
        cases = [
            (cycle_cycle_family(3, 4, (0, 0), (1, 1)), 2),
            (cycle_bicycle_family(3, 4, (0, 0), (1, 1)), 3),
            (cycle_complete_family(3, 4, (0, 0), (1, 1)), 4),
        ]
        for (p, fam), size in cases:
            assert len(fam.members) == size
            assert lambda_2(p.digraph).value == size

    def test_rejects_identical_seeds(self):
        with pytest.raises(DigraphError):
            cycle_cycle_family(3, 3, (1, 1), (1, 1))

    def test_rejects_undersized_factors(self):
        with pytest.raises(DigraphError):
            cycle_cycle_family(2, 3, (0, 0), (1, 1))
        with pytest.raises(DigraphError):
            cycle_complete_family(3, 1, (0, 0), (1, 0))


class TestLift:
    def check(self, g, h, x_pos, y_pos, expected_size):
        p, fam = lift_certificates(g, h, x_pos, y_pos)
        assert fam.origin == "lift"
        assert verify_certificate(p.digraph, fam).valid
        lower = lambda_2(g).value + lambda_2(h).value - 1
        assert len(fam.members) >= lower
        assert len(fam.members) == expected_size
        return fam

    def test_same_row_gets_full_size(self):
        self.check(directed_cycle(3), directed_cycle(3), (0, 0), (0, 1), 2)

    def test_same_column_gets_full_size(self):
        self.check(directed_cycle(3), directed_cycle(3), (0, 0), (1, 0), 2)

    def test_general_position_both_factors_forced(self):
        # both directed triangles must branch through the opposite seed line;
        # the swap repair still yields the full two members
        self.check(directed_cycle(3), directed_cycle(3), (0, 0), (1, 1), 2)

    def test_one_factor_forced_drops_one_member(self):
        # the triangle is forced and the bidirected square has no spare member
        self.check(directed_cycle(3), bidirected_cycle(4), (0, 0), (1, 2), 2)

    def test_one_factor_forced_with_spare_member(self):
        # K23 packs 3 members for the pair (0, 3) although its minimum is 2,
        # so a spare member absorbs the collision and the size stays full
        self.check(directed_cycle(3), K23, (0, 0), (1, 3), 3)
        self.check(K23, directed_cycle(3), (0, 0), (3, 1), 3)

    def test_unforced_general_position(self):
        self.check(complete_digraph(3), complete_digraph(3), (0, 0), (1, 1), 4)

    def test_exhaustive_seed_sweep_on_cycle_square(self):
        g = h = directed_cycle(3)
        p = cartesian_product(g, h)
        sizes = []
        for x in range(p.digraph.n):
            for y in range(x + 1, p.digraph.n):
                _, fam = lift_certificates(g, h, p.decode(x), p.decode(y))
                assert verify_certificate(p.digraph, fam).valid
                sizes.append(len(fam.members))
        assert min(sizes) >= 1  # lower bound for two directed cycles
        assert sorted(set(sizes)) == [1, 2]

    @pytest.mark.parametrize("seed", range(8))
    def test_random_factors(self, seed):
        rng = random.Random(seed)
        g = random_strong_digraph(rng.randint(2, 4), 0.3, rng.getrandbits(32))
        h = random_strong_digraph(rng.randint(2, 4), 0.3, rng.getrandbits(32))
        p = cartesian_product(g, h)
        pairs = [(x, y) for x in range(p.digraph.n) for y in range(x + 1, p.digraph.n)]
        for x, y in rng.sample(pairs, min(6, len(pairs))):
            _, fam = lift_certificates(g, h, p.decode(x), p.decode(y))
            assert verify_certificate(p.digraph, fam).valid
            assert len(fam.members) >= lambda_2(g).value + lambda_2(h).value - 1

    def test_rejects_non_strong_factor(self):
        with pytest.raises(DigraphError):
            lift_certificates(from_arc_list(3, [(0, 1), (1, 2)]), directed_cycle(3), (0, 0), (1, 1))


class TestHunt:
    def test_deterministic(self):
        cfg = HuntConfig(trials=12, max_order=3, seed=5)
        assert hunt_tightness(cfg) == hunt_tightness(cfg)

    def test_zero_trials(self):
        report = hunt_tightness(HuntConfig(trials=0, seed=0))
        assert report.trials == 0 and report.sandwich_ok
        assert report.gap_counts == () and report.hits == ()

    def test_sandwich_holds_and_gaps_tally(self):
        report = hunt_tightness(HuntConfig(trials=15, max_order=3, seed=1))
        assert report.sandwich_ok
        assert sum(count for _, count in report.gap_counts) == 15
        assert all(gap >= 0 for gap, _ in report.gap_counts)
        for hit in report.hits:
            assert hit.observed == hit.lower
