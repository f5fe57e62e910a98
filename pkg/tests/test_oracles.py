import random

import pytest

from graphcohom import (
    AbelianGroup,
    BigradedGroups,
    EnhancedState,
    Graph,
    SparseIntMatrix,
    TRIVIAL_GROUP,
    check_chain_ses,
    check_kunneth,
    check_les_rank_consistency,
    check_pendant_shift,
    cohomology,
    cycle_cohomology,
    cycle_graph,
    differential,
    direct_sum,
    disjoint_union,
    enumerate_basis,
    integral_column_span_contains,
    integral_kernel_basis,
    kunneth_compose,
    null_cohomology,
    null_graph,
    tensor_group,
    tor_group,
    tree_cohomology,
)
from graphcohom.oracles import (
    _first_mismatch,
    kunneth_report,
    les_report,
    pendant_report,
    ses_report,
)
from helpers import TRIANGLE, attach_pendant, random_multigraph, random_tree

Z = AbelianGroup(1)
Z2 = AbelianGroup(0, (2,))


def random_group(rng):
    free = rng.randint(0, 2)
    orders = [rng.choice((2, 2, 3, 4, 6, 9)) for _ in range(rng.randint(0, 2))]
    from graphcohom import group_from_cyclic_orders

    return group_from_cyclic_orders(free, orders)


class TestTensorAndTor:
    def test_tensor_unit_cases(self):
        assert tensor_group(Z, Z) == Z
        assert tensor_group(AbelianGroup(1, (2,)), AbelianGroup(2)) == (
            AbelianGroup(2, (2, 2))
        )
        assert tensor_group(AbelianGroup(0, (4,)), AbelianGroup(0, (6,))) == Z2
        assert tensor_group(TRIVIAL_GROUP, AbelianGroup(3, (2, 4))) == TRIVIAL_GROUP

    def test_tensor_with_z_is_identity(self):
        rng = random.Random(41)
        for _ in range(20):
            grp = random_group(rng)
            assert tensor_group(grp, Z) == grp

    def test_tor_unit_cases(self):
        assert tor_group(AbelianGroup(0, (4,)), AbelianGroup(0, (6,))) == Z2
        assert tor_group(Z, AbelianGroup(0, (5,))) == TRIVIAL_GROUP
        assert tor_group(AbelianGroup(0, (2, 4)), AbelianGroup(0, (6,))) == (
            AbelianGroup(0, (2, 2))
        )
        assert tor_group(AbelianGroup(7), AbelianGroup(9)) == TRIVIAL_GROUP

    def test_commutativity(self):
        rng = random.Random(43)
        for _ in range(30):
            a, b = random_group(rng), random_group(rng)
            assert tensor_group(a, b) == tensor_group(b, a)
            assert tor_group(a, b) == tor_group(b, a)

    def test_distributivity_over_direct_sum(self):
        rng = random.Random(47)
        for _ in range(30):
            a, b, c = (random_group(rng) for _ in range(3))
            assert tensor_group(a, direct_sum(b, c)) == direct_sum(
                tensor_group(a, b), tensor_group(a, c)
            )
            assert tor_group(a, direct_sum(b, c)) == direct_sum(
                tor_group(a, b), tor_group(a, c)
            )


class TestFamilyFormulas:
    def test_null_formula_matches_computation(self):
        for v in range(7):
            assert null_cohomology(v) == cohomology(null_graph(v)), v

    def test_tree_formula_matches_random_trees(self):
        rng = random.Random(53)
        for n in range(8):
            for _ in range(3):
                t = random_tree(rng, n)
                assert cohomology(t) == tree_cohomology(n), t

    def test_cycle_formula_matches_polygons(self):
        for n in range(1, 8):
            assert cycle_cohomology(n) == cohomology(cycle_graph(n)), n

    def test_cycle_three_literal(self):
        assert cycle_cohomology(3) == BigradedGroups(
            {(0, 3): Z, (1, 2): Z2, (1, 1): Z}
        )

    def test_validation(self):
        with pytest.raises(ValueError):
            null_cohomology(-1)
        with pytest.raises(ValueError):
            tree_cohomology(-1)
        with pytest.raises(ValueError):
            cycle_cohomology(0)


class TestTreeWitnessVectors:
    """The two explicit height-zero generators of a tree's cohomology."""

    @staticmethod
    def bipartition_signs(t: Graph) -> list[int]:
        # +-1 by parity of distance from vertex 0; trees are bipartite
        adjacency: dict[int, list[int]] = {v: [] for v in range(t.vertex_count)}
        for a, b in t.edges:
            adjacency[a].append(b)
            adjacency[b].append(a)
        sign = [0] * t.vertex_count
        sign[0] = 1
        queue = [0]
        while queue:
            v = queue.pop()
            for w in adjacency[v]:
                if sign[w] == 0:
                    sign[w] = -sign[v]
                    queue.append(w)
        return sign

    def test_alternating_sum_generates_degree_n(self):
        rng = random.Random(59)
        for n in range(1, 7):
            t = random_tree(rng, n)
            basis = enumerate_basis(t)
            v = t.vertex_count
            sign = self.bipartition_signs(t)
            full = (1 << v) - 1
            vec = [0] * basis.size(0, n)
            for i in range(v):
                # at the empty edge set, component ids equal vertex ids
                state_pos = basis.position[EnhancedState(0, full ^ (1 << i))]
                vec[state_pos] += sign[i]
            d = differential(t, basis, 0, n)
            image = [0] * d.rows
            for r, c, val in d.entries:
                image[r] += val * vec[c]
            assert all(x == 0 for x in image)
            kernel = integral_kernel_basis(d)
            assert len(kernel) == 1
            eps1 = SparseIntMatrix.from_dict(
                len(vec), 1, {(r, 0): x for r, x in enumerate(vec)}
            )
            gen = SparseIntMatrix.from_dict(
                len(vec), 1, {(r, 0): x for r, x in enumerate(kernel[0])}
            )
            # mutual divisibility pins eps1 as a generator, not just a member
            assert integral_column_span_contains(gen, [tuple(vec)])
            assert integral_column_span_contains(eps1, [kernel[0]])

    def test_all_x_state_spans_top_degree(self):
        rng = random.Random(61)
        for n in range(1, 7):
            t = random_tree(rng, n)
            basis = enumerate_basis(t)
            v = t.vertex_count
            assert basis.size(0, v) == 1
            d = differential(t, basis, 0, v)
            # every edge merges two x-colored components, so the block is 0
            assert d.is_zero()
            assert cohomology(t).group(0, v) == Z


class TestPendantShift:
    def test_single_edge_is_shifted_point(self):
        assert check_pendant_shift(Graph(2, ((0, 1),)), 0)
        assert cohomology(Graph(2, ((0, 1),))) == (
            cohomology(null_graph(1)).degree_shifted(1)
        )

    def test_randomly_attached_pendants(self):
        rng = random.Random(67)
        for _ in range(15):
            base = random_multigraph(rng, max_vertices=4, max_edges=5)
            g, e = attach_pendant(rng, base)
            assert check_pendant_shift(g, e), (g, e)

    def test_rejects_non_pendant_edge(self):
        with pytest.raises(ValueError, match="not a pendant"):
            pendant_report(TRIANGLE, 0)

    def test_rejects_loop(self):
        g = Graph(2, ((0, 0), (0, 1)))
        with pytest.raises(ValueError):
            pendant_report(g, 0)


class TestShortExactSequence:
    def test_triangle_every_edge(self):
        for e in range(3):
            assert check_chain_ses(TRIANGLE, e)

    def test_single_edge(self):
        assert check_chain_ses(Graph(2, ((0, 1),)), 0)

    def test_parallel_and_pendant_mix(self):
        g = Graph(3, ((0, 1), (0, 1), (1, 2)))
        for e in range(3):
            assert check_chain_ses(g, e)

    def test_random_corpus(self):
        rng = random.Random(71)
        done = 0
        while done < 10:
            g = random_multigraph(rng, max_vertices=5, max_edges=5)
            for e, (a, b) in enumerate(g.edges):
                if a != b:
                    assert check_chain_ses(g, e), (g, e)
                    done += 1

    def test_rejects_loop(self):
        g = Graph(1, ((0, 0),))
        with pytest.raises(ValueError, match="loop"):
            ses_report(g, 0)


class TestLongExactSequence:
    def test_triangle_every_edge(self):
        for e in range(3):
            assert check_les_rank_consistency(TRIANGLE, e)

    def test_random_corpus(self):
        rng = random.Random(73)
        done = 0
        while done < 12:
            g = random_multigraph(rng, max_vertices=5, max_edges=6)
            for e, (a, b) in enumerate(g.edges):
                if a != b:
                    assert check_les_rank_consistency(g, e), (g, e)
                    done += 1

    def test_rejects_loop(self):
        g = Graph(1, ((0, 0),))
        with pytest.raises(ValueError, match="loop"):
            les_report(g, 0)


class TestKunneth:
    def test_two_points(self):
        h1 = cohomology(null_graph(1))
        composed = kunneth_compose(h1, h1)
        assert composed == cohomology(null_graph(2))
        assert composed.group(0, 1) == AbelianGroup(2)

    def test_two_triangles_has_tor_term(self):
        h = cohomology(TRIANGLE)
        composed = kunneth_compose(h, h)
        # the Z_2 x Z_2 pair contributes a Tor summand one height down
        assert composed.group(1, 4) == AbelianGroup(2, (2,))
        assert composed.group(2, 4) == Z2
        assert composed == cohomology(disjoint_union(TRIANGLE, TRIANGLE))
        assert kunneth_report(TRIANGLE, TRIANGLE) is None

    def test_random_pairs(self):
        rng = random.Random(79)
        for _ in range(20):
            g1 = random_multigraph(rng, max_vertices=4, max_edges=4)
            g2 = random_multigraph(rng, max_vertices=4, max_edges=4)
            assert check_kunneth(g1, g2), (g1, g2)


class TestMismatchReporting:
    def test_first_mismatch_names_the_bidegree(self):
        actual = BigradedGroups({(0, 1): Z, (1, 2): Z})
        expected = BigradedGroups({(0, 1): Z, (1, 2): Z2, (2, 0): Z})
        report = _first_mismatch(actual, expected)
        assert report == {"i": 1, "j": 2, "actual": "Z", "expected": "Z_2"}

    def test_no_mismatch_is_none(self):
        h = BigradedGroups({(0, 1): Z})
        assert _first_mismatch(h, h) is None
