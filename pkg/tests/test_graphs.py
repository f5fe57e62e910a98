import io
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcohom import (
    Graph,
    LoopContractionError,
    ParseError,
    components,
    contract_edge,
    cycle_graph,
    delete_edge,
    disjoint_union,
    null_graph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    permute_edge_order,
    simplify,
)
from helpers import TRIANGLE, bfs_component_count, random_multigraph
from strategies import graphs


class TestGraphValue:
    def test_rejects_negative_vertex_count(self):
        with pytest.raises(ValueError):
            Graph(-1, ())

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(ValueError):
            Graph(2, ((0, 2),))
        with pytest.raises(ValueError):
            Graph(1, ((-1, 0),))

    def test_edge_order_is_part_of_identity(self):
        g1 = Graph(3, ((0, 1), (1, 2)))
        g2 = Graph(3, ((1, 2), (0, 1)))
        assert g1 != g2

    def test_canonical_edges_normalises_endpoints_only(self):
        g = Graph(3, ((2, 0), (1, 2)))
        assert g.canonical_edges() == ((0, 2), (1, 2))
        assert g.edges == ((2, 0), (1, 2))

    def test_degree_counts_loop_twice(self):
        g = Graph(2, ((0, 0), (0, 1)))
        assert g.degrees() == [3, 1]

    def test_loop_and_parallel_detection(self):
        assert Graph(1, ((0, 0),)).has_loop()
        assert not TRIANGLE.has_loop()
        assert Graph(2, ((0, 1), (1, 0))).has_parallel_edges()
        assert not TRIANGLE.has_parallel_edges()
        # two loops at one vertex are parallel to each other
        assert Graph(1, ((0, 0), (0, 0))).has_parallel_edges()


class TestParseEdgeList:
    def test_triangle_keeps_file_order(self):
        g = parse_edge_list("v 3\ne 0 1\ne 1 2\ne 2 0\n")
        assert g.vertex_count == 3
        assert g.edges == ((0, 1), (1, 2), (2, 0))

    def test_single_vertex_loop(self):
        g = parse_edge_list("v 1\ne 0 0\n")
        assert g == Graph(1, ((0, 0),))

    def test_two_parallel_edges(self):
        g = parse_edge_list("v 2\ne 0 1\ne 0 1\n")
        assert g == Graph(2, ((0, 1), (0, 1)))

    def test_comments_and_blanks_ignored(self):
        text = "# header\n\nv 2\n  # indented comment\ne 0 1\n\n"
        assert parse_edge_list(text) == Graph(2, ((0, 1),))

    def test_accepts_file_object(self):
        g = parse_edge_list(io.StringIO("v 2\ne 0 1\n"))
        assert g.edge_count == 1

    def test_missing_header_line(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_edge_list("e 0 1\n")

    def test_empty_input(self):
        with pytest.raises(ParseError, match="missing 'v"):
            parse_edge_list("# nothing here\n")

    def test_negative_vertex_count(self):
        with pytest.raises(ParseError, match="non-negative"):
            parse_edge_list("v -2\n")

    def test_malformed_edge_line_reports_line_number(self):
        err = None
        try:
            parse_edge_list("v 3\ne 0\n")
        except ParseError as exc:
            err = exc
        assert err is not None
        assert err.line_no == 2
        assert "line 2" in str(err)

    def test_endpoint_out_of_range_reports_line_number(self):
        with pytest.raises(ParseError, match="line 3: endpoint out of range"):
            parse_edge_list("v 2\ne 0 1\ne 0 2\n")

    def test_non_integer_endpoint(self):
        with pytest.raises(ParseError, match="integers"):
            parse_edge_list("v 2\ne 0 x\n")


class TestParseGraph6:
    def test_complete_graph_on_three_vertices(self):
        g = parse_graph6("Bw")
        assert g.vertex_count == 3
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_single_edge(self):
        assert parse_graph6("A_") == Graph(2, ((0, 1),))

    def test_four_cycle_lexicographic_order(self):
        g = parse_graph6("Cl")
        assert g.vertex_count == 4
        assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<Bw") == parse_graph6("Bw")

    def test_agreement_with_reference_decoder(self):
        rng = random.Random(20240817)
        for _ in range(60):
            n = rng.randint(1, 9)
            ref = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1 << 30))
            encoded = nx.to_graph6_bytes(ref, header=False).decode().strip()
            g = parse_graph6(encoded)
            assert g.vertex_count == ref.number_of_nodes()
            assert set(g.canonical_edges()) == {
                (min(a, b), max(a, b)) for a, b in ref.edges()
            }
            assert g.edges == tuple(sorted(g.canonical_edges()))

    def test_invalid_byte(self):
        with pytest.raises(ParseError, match="invalid graph6 byte"):
            parse_graph6("B>")

    def test_truncated_body(self):
        with pytest.raises(ParseError, match="expected"):
            parse_graph6("C")

    def test_overlong_body(self):
        with pytest.raises(ParseError, match="expected"):
            parse_graph6("Bww")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_graph6("")


class TestComponents:
    def test_triangle_no_edges(self):
        assert components(TRIANGLE, 0b000).count == 3

    def test_triangle_one_edge(self):
        assert components(TRIANGLE, 0b001).count == 2

    def test_triangle_all_edges(self):
        assert components(TRIANGLE, 0b111).count == 1

    def test_component_ids_are_minimal_vertices(self):
        # edges (0,1),(1,2),(0,2): with only (1,2) active, classes {0},{1,2}
        part = components(TRIANGLE, 0b010)
        assert part.count == 2
        assert part.component_of[0] != part.component_of[1]
        assert part.component_of[1] == part.component_of[2]

    def test_loop_does_not_merge_anything(self):
        g = Graph(2, ((0, 0), (0, 1)))
        assert components(g, 0b01).count == 2

    def test_against_breadth_first_oracle(self):
        rng = random.Random(99)
        for _ in range(120):
            g = random_multigraph(rng, max_vertices=7, max_edges=9)
            mask = rng.randrange(1 << g.edge_count)
            assert components(g, mask).count == bfs_component_count(g, mask)


class TestDeleteContract:
    def test_delete_from_triangle(self):
        assert delete_edge(TRIANGLE, 2) == Graph(3, ((0, 1), (1, 2)))

    def test_delete_only_edge(self):
        assert delete_edge(Graph(2, ((0, 1),)), 0) == null_graph(2)

    def test_delete_one_parallel_copy(self):
        doubled = Graph(2, ((0, 1), (0, 1)))
        assert delete_edge(doubled, 0) == Graph(2, ((0, 1),))

    def test_delete_then_reinsert_round_trips(self):
        rng = random.Random(5)
        for _ in range(40):
            g = random_multigraph(rng, max_vertices=5, max_edges=6)
            if g.edge_count == 0:
                continue
            e = rng.randrange(g.edge_count)
            d = delete_edge(g, e)
            restored = Graph(g.vertex_count, d.edges[:e] + (g.edges[e],) + d.edges[e:])
            assert restored == g

    def test_delete_index_out_of_range(self):
        with pytest.raises(IndexError):
            delete_edge(TRIANGLE, 3)

    def test_contract_triangle_edge_gives_doubled_edge(self):
        g = contract_edge(TRIANGLE, 2)
        assert g.vertex_count == 2
        assert g.canonical_edges() == ((0, 1), (0, 1))

    def test_contract_parallel_edge_gives_loop(self):
        doubled = Graph(2, ((0, 1), (0, 1)))
        assert contract_edge(doubled, 0) == Graph(1, ((0, 0),))

    def test_contract_single_edge(self):
        assert contract_edge(Graph(2, ((0, 1),)), 0) == null_graph(1)

    def test_contract_keeps_smaller_endpoint_and_shifts(self):
        # contracting (1,3) merges 3 into 1 and shifts vertex 4 down
        g = Graph(5, ((1, 3), (3, 4), (0, 2), (2, 4)))
        got = contract_edge(g, 0)
        assert got == Graph(4, ((1, 3), (0, 2), (2, 3)))

    def test_contract_loop_refused(self):
        g = Graph(2, ((0, 0), (0, 1)))
        with pytest.raises(LoopContractionError):
            contract_edge(g, 0)

    @given(graphs(allow_loops=False, min_vertices=2))
    def test_contract_counts(self, g):
        if g.edge_count == 0:
            return
        got = contract_edge(g, 0)
        assert got.vertex_count == g.vertex_count - 1
        assert got.edge_count == g.edge_count - 1


class TestSimplify:
    def test_doubled_edge_collapses(self):
        res = simplify(Graph(2, ((0, 1), (0, 1))))
        assert res.graph == Graph(2, ((0, 1),))
        assert res.has_loop is False

    def test_loop_retained_and_flagged(self):
        res = simplify(Graph(1, ((0, 0),)))
        assert res.graph == Graph(1, ((0, 0),))
        assert res.has_loop is True

    def test_simple_graph_unchanged(self):
        assert simplify(TRIANGLE) == (TRIANGLE, False)

    def test_keeps_earliest_copy(self):
        g = Graph(3, ((1, 2), (0, 1), (2, 1)))
        assert simplify(g).graph == Graph(3, ((1, 2), (0, 1)))

    @given(graphs())
    def test_idempotent(self, g):
        once = simplify(g).graph
        assert simplify(once).graph == once


class TestDisjointUnionAndPermutation:
    def test_two_single_vertices(self):
        assert disjoint_union(null_graph(1), null_graph(1)) == null_graph(2)

    def test_edge_plus_isolated_vertex(self):
        got = disjoint_union(Graph(2, ((0, 1),)), null_graph(1))
        assert got == Graph(3, ((0, 1),))

    def test_two_triangles(self):
        got = disjoint_union(TRIANGLE, TRIANGLE)
        assert got.vertex_count == 6
        assert got.edge_count == 6
        assert got.edges[3:] == ((3, 4), (4, 5), (3, 5))

    @given(graphs())
    def test_empty_graph_is_right_identity(self, g):
        assert disjoint_union(g, null_graph(0)) == g

    def test_identity_permutation(self):
        assert permute_edge_order(TRIANGLE, (0, 1, 2)) == TRIANGLE

    def test_transposition(self):
        got = permute_edge_order(TRIANGLE, (1, 0, 2))
        assert got.edges == ((1, 2), (0, 1), (0, 2))

    @given(graphs(), st.randoms(use_true_random=False))
    def test_permutation_then_inverse_round_trips(self, g, rnd):
        sigma = list(range(g.edge_count))
        rnd.shuffle(sigma)
        inverse = [0] * len(sigma)
        for k, pos in enumerate(sigma):
            inverse[pos] = k
        assert permute_edge_order(permute_edge_order(g, sigma), inverse) == g

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            permute_edge_order(TRIANGLE, (0, 0, 2))
        with pytest.raises(ValueError):
            permute_edge_order(TRIANGLE, (0, 1))


class TestFamilyConstructors:
    def test_null_graph(self):
        assert null_graph(3) == Graph(3, ())
        assert null_graph(0) == Graph(0, ())

    def test_path_graph(self):
        assert path_graph(0) == Graph(1, ())
        assert path_graph(3) == Graph(4, ((0, 1), (1, 2), (2, 3)))

    def test_cycle_graph_small_cases(self):
        assert cycle_graph(1) == Graph(1, ((0, 0),))
        assert cycle_graph(2) == Graph(2, ((0, 1), (1, 0)))
        assert cycle_graph(3).canonical_edges() == ((0, 1), (1, 2), (0, 2))

    def test_cycle_graph_degree_regular(self):
        for n in (3, 4, 5, 6):
            assert cycle_graph(n).degrees() == [2] * n

    def test_cycle_needs_an_edge(self):
        with pytest.raises(ValueError):
            cycle_graph(0)
