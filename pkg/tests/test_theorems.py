"""Tests for the verification harness and its brute-force oracles."""

import itertools
import random

import pytest

from chipfire import (
    CriticalGroup,
    Graph,
    InputError,
    NotConnectedError,
    SizeError,
    brute_force_spanning_trees,
    complete,
    cone,
    critical_group,
    cycle,
    from_edge_list,
    groups_isomorphic,
    is_connected,
    is_tree,
    path,
    random_connected_graph,
    random_tree,
    spanning_tree_count,
    tree_from_pruefer,
    verify_cone_theorem,
    verify_eigenvectors,
    verify_join_theorem,
    verify_tree_bound,
)

GOEL = from_edge_list(6, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)])
FORK_TREE = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


def all_connected_labeled_graphs(max_vertices):
    for n in range(1, max_vertices + 1):
        possible = list(itertools.combinations(range(n), 2))
        for size in range(len(possible) + 1):
            for edges in itertools.combinations(possible, size):
                g = Graph(n, edges)
                if is_connected(g):
                    yield g


class TestVerifyConeTheorem:
    def test_goel_counterexample(self):
        report = verify_cone_theorem(GOEL, 3)
        assert report.pic0.invariant_factors == (144, 8208)
        assert groups_isomorphic(
            report.pic0, CriticalGroup.from_cyclic_orders([9, 27, 16, 16, 19])
        )
        assert report.subgroup.invariant_factors == (9, 9)
        assert report.order_formula_holds
        assert report.subgroup_is_expected
        assert not report.splits
        assert report.holds

    def test_point_cones_are_complete_graphs(self):
        for n in range(1, 6):
            report = verify_cone_theorem(complete(1), n)
            assert report.pic0.invariant_factors == (n + 1,) * (n - 1)
            assert report.quotient_h.is_trivial
            assert report.p_at_minus_n == 1
            assert report.splits
            assert report.holds

    def test_fan(self):
        report = verify_cone_theorem(path(5), 1)
        assert report.pic0.invariant_factors == (55,)
        assert report.subgroup.is_trivial  # n - 1 == 0 generators
        assert report.quotient_h.invariant_factors == (55,)
        assert report.splits and report.holds

    def test_group_order_factors_exactly(self):
        rng = random.Random(17)
        for _ in range(12):
            g = random_connected_graph(rng, rng.randint(2, 6))
            n = rng.randint(1, 4)
            report = verify_cone_theorem(g, n)
            assert report.holds
            assert report.pic0.order == report.subgroup.order * report.quotient_h.order
            assert report.pic0.order == (n + g.vertex_count) ** (n - 1) * report.p_at_minus_n

    def test_exhaustive_small_graphs(self):
        # every connected labeled graph on up to 4 vertices, every n <= 4
        for g in all_connected_labeled_graphs(4):
            for n in range(1, 5):
                report = verify_cone_theorem(g, n)
                assert report.holds
                assert report.pic0.order == report.subgroup.order * report.quotient_h.order

    def test_disconnected_base_rejected(self):
        with pytest.raises(NotConnectedError):
            verify_cone_theorem(Graph(2), 2)

    def test_bad_cone_size(self):
        with pytest.raises(InputError):
            verify_cone_theorem(path(3), 0)


class TestVerifyJoinTheorem:
    def test_three_points_make_triangle(self):
        report = verify_join_theorem([complete(1)] * 3)
        assert report.lhs == 3 and report.rhs == 3 and report.holds

    def test_join_with_complete_reproduces_cone_formula(self):
        for g, n in ((path(3), 2), (GOEL, 3), (cycle(4), 1)):
            report = verify_join_theorem([g, complete(n)])
            k = g.vertex_count
            assert report.holds
            assert report.lhs == spanning_tree_count(cone(g, n))
            assert report.lhs == critical_group(cone(g, n)).order

    def test_two_paths(self):
        assert verify_join_theorem([path(3), path(2)]).holds

    def test_random_tuples(self):
        rng = random.Random(29)
        for _ in range(20):
            factors = [
                random_connected_graph(rng, rng.randint(1, 5))
                for _ in range(rng.randint(2, 3))
            ]
            assert verify_join_theorem(factors).holds

    def test_disconnected_factors_exploratory(self):
        # the formula extends to disconnected factors with P = char_poly / x
        rng = random.Random(37)
        for _ in range(15):
            n1, n2 = rng.randint(1, 4), rng.randint(2, 4)
            edges = [
                (u, v)
                for u in range(n2)
                for v in range(u + 1, n2)
                if rng.random() < 0.3
            ]
            factors = [random_connected_graph(rng, n1), Graph(n2, edges)]
            assert verify_join_theorem(factors).holds

    def test_single_factor_rejected(self):
        with pytest.raises(InputError):
            verify_join_theorem([path(3)])


class TestVerifyTreeBound:
    def test_fork_tree(self):
        report = verify_tree_bound(FORK_TREE, 1)
        assert report == (3, 1, True)

    def test_two_vertex_tree(self):
        for n in (1, 2, 3):
            report = verify_tree_bound(path(2), n)
            assert report.leaf_count == 2
            assert report.h_generators <= 1
            assert report.holds

    def test_random_trees(self):
        rng = random.Random(43)
        for _ in range(25):
            g = random_tree(rng, rng.randint(2, 8))
            n = rng.randint(1, 5)
            assert verify_tree_bound(g, n).holds

    def test_star_needs_many_leaves(self):
        star = from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        report = verify_tree_bound(star, 2)
        assert report.leaf_count == 4 and report.holds

    def test_non_tree_rejected(self):
        with pytest.raises(InputError):
            verify_tree_bound(cycle(4), 1)
        with pytest.raises(InputError):
            verify_tree_bound(complete(1), 1)


class TestVerifyEigenvectors:
    def test_small_cases(self):
        assert verify_eigenvectors(path(3), 4)
        assert verify_eigenvectors(complete(1), 3)
        assert verify_eigenvectors(GOEL, 3)

    def test_n_one_has_only_balanced_vector(self):
        assert verify_eigenvectors(path(5), 1)

    def test_random_cases(self):
        rng = random.Random(47)
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(1, 7))
            assert verify_eigenvectors(g, rng.randint(1, 5))

    def test_disconnected_base_still_exact(self):
        # the identities are degree computations and hold without connectivity
        assert verify_eigenvectors(Graph(3, [(0, 1)]), 2)


class TestBruteForceSpanningTrees:
    def test_complete_four(self):
        assert brute_force_spanning_trees(complete(4)) == 16

    def test_cycle(self):
        assert brute_force_spanning_trees(cycle(6)) == 6

    def test_trees_have_one(self):
        assert brute_force_spanning_trees(FORK_TREE) == 1
        assert brute_force_spanning_trees(path(7)) == 1

    def test_single_vertex(self):
        assert brute_force_spanning_trees(complete(1)) == 1

    def test_disconnected_graph_has_none(self):
        assert brute_force_spanning_trees(Graph(3, [(0, 1)])) == 0

    def test_size_guard(self):
        with pytest.raises(SizeError):
            brute_force_spanning_trees(path(11))

    def test_agrees_with_matrix_tree(self):
        rng = random.Random(53)
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(2, 7))
            assert brute_force_spanning_trees(g) == spanning_tree_count(g)


class TestRandomGenerators:
    def test_random_tree_is_tree(self):
        rng = random.Random(59)
        for _ in range(30):
            g = random_tree(rng, rng.randint(1, 9))
            assert is_tree(g) or g.vertex_count == 1

    def test_random_connected_graph_is_connected(self):
        rng = random.Random(61)
        for _ in range(30):
            assert is_connected(random_connected_graph(rng, rng.randint(1, 8)))

    def test_determinism(self):
        assert random_tree(random.Random(5), 8) == random_tree(random.Random(5), 8)
        assert random_connected_graph(random.Random(5), 6) == random_connected_graph(
            random.Random(5), 6
        )

    def test_pruefer_decode_matches_cayley(self):
        n = 5
        trees = {
            tree_from_pruefer(seq, n)
            for seq in itertools.product(range(n), repeat=n - 2)
        }
        assert len(trees) == n ** (n - 2)

    def test_pruefer_small_cases(self):
        assert tree_from_pruefer((), 1) == complete(1)
        assert tree_from_pruefer((), 2) == path(2)
        with pytest.raises(InputError):
            tree_from_pruefer((0,), 2)
