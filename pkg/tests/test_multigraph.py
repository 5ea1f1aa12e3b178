import random

import pytest

from hamcirc.multigraph import (
    EdgeCut,
    Multigraph,
    circulant_graph,
    complete_bipartite,
    complete_graph,
    cubic_cycles_through_edge,
    cycle_graph,
    enumerate_hamiltonian_cycles,
    find_cut_separating_pair,
    generalized_petersen,
    has_minor,
    is_outerplanar,
    outerplanar_by_minor_search,
    parse_adjacency,
)


class TestConstruction:
    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            Multigraph(["x", "y"], [(0, 0)])

    def test_parallel_edges_and_degrees(self):
        g = Multigraph(["x", "y"], [(0, 1), (1, 0)])
        assert g.degree(0) == 2 and g.degree(1) == 2
        assert len(g.edges_between(0, 1)) == 2
        assert not g.is_simple()

    def test_handshake(self):
        rng = random.Random(3)
        for _ in range(50):
            n = rng.randrange(2, 9)
            edges = [
                (rng.randrange(n), rng.randrange(n)) for _ in range(rng.randrange(12))
            ]
            edges = [(u, v) for u, v in edges if u != v]
            g = Multigraph([str(i) for i in range(n)], edges)
            assert sum(g.degrees()) == 2 * g.n_edges


class TestCycleRecognition:
    def test_triangle(self):
        assert cycle_graph(3).is_cycle()

    def test_two_disjoint_triangles(self):
        g = Multigraph(
            list("abcdef"), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        )
        assert not g.is_cycle()

    def test_path_is_not_cycle(self):
        g = Multigraph(list("abcd"), [(0, 1), (1, 2), (2, 3)])
        assert not g.is_cycle()

    def test_double_edge_is_not_cycle(self):
        g = Multigraph(["x", "y"], [(0, 1), (0, 1)])
        assert not g.is_cycle()

    def test_cycle_edge_count(self):
        for k in (3, 5, 8):
            g = cycle_graph(k)
            assert g.is_cycle() and g.n_edges == g.n_vertices


class TestComponents:
    def test_empty(self):
        assert Multigraph([], []).connected_components() == []

    def test_triangle_plus_isolated(self):
        g = Multigraph(list("abcd"), [(0, 1), (1, 2), (2, 0)])
        assert g.connected_components() == [[0, 1, 2], [3]]

    def test_k4_connected(self):
        assert complete_graph(4).connected_components() == [[0, 1, 2, 3]]


class TestHamiltonianEnumeration:
    def test_c5_has_one(self):
        assert len(enumerate_hamiltonian_cycles(cycle_graph(5))) == 1

    def test_k4_has_three(self):
        assert len(enumerate_hamiltonian_cycles(complete_graph(4))) == 3

    def test_petersen_has_none(self):
        assert enumerate_hamiltonian_cycles(generalized_petersen(5, 2)) == []

    def test_canonical_and_valid(self):
        g = circulant_graph(7, [1, 2])
        cycles = enumerate_hamiltonian_cycles(g)
        assert len(cycles) == len(set(cycles))
        adj = {v: set(g.neighbors(v)) for v in range(7)}
        for cyc in cycles:
            assert cyc[0] == 0 and cyc[1] < cyc[-1]
            assert sorted(cyc) == list(range(7))
            for i in range(7):
                assert cyc[(i + 1) % 7] in adj[cyc[i]]

    def test_rejects_parallel_edges(self):
        g = Multigraph(["x", "y", "z"], [(0, 1), (0, 1), (1, 2), (2, 0)])
        with pytest.raises(ValueError):
            enumerate_hamiltonian_cycles(g)

    def test_size_cap(self):
        g = cycle_graph(21)
        with pytest.raises(ValueError):
            enumerate_hamiltonian_cycles(g)


class TestCubicCounts:
    def test_k4_every_edge_twice(self):
        g = complete_graph(4)
        assert [cubic_cycles_through_edge(g, i) for i in range(6)] == [2] * 6

    def test_k33_even(self):
        g = complete_bipartite(3, 3)
        for i in range(g.n_edges):
            assert cubic_cycles_through_edge(g, i) % 2 == 0

    def test_petersen_zero(self):
        g = generalized_petersen(5, 2)
        assert cubic_cycles_through_edge(g, 0) == 0

    def test_non_cubic_rejected(self):
        with pytest.raises(ValueError):
            cubic_cycles_through_edge(cycle_graph(4), 0)


class TestEdgeCuts:
    def test_from_side_validates(self):
        g = cycle_graph(4)
        with pytest.raises(ValueError):
            EdgeCut.from_side(g, [])
        with pytest.raises(ValueError):
            EdgeCut.from_side(g, range(4))

    def test_c6_antipodal_pair(self):
        g = cycle_graph(6)
        factor = range(6)
        cut = find_cut_separating_pair(g, factor, 0, 3)
        assert cut is not None
        assert len(cut.cut_edges) == 2
        assert set(cut.cut_edges) == {0, 3}

    def test_absent_when_impossible(self):
        g = Multigraph(
            list("abcdef"), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        )
        assert find_cut_separating_pair(g, range(6), 0, 3) is None


class TestOuterplanarity:
    def test_cycles_are_outerplanar(self):
        for k in (3, 4, 7):
            assert is_outerplanar(cycle_graph(k))

    def test_k4_and_k23_are_not(self):
        assert not is_outerplanar(complete_graph(4))
        assert not is_outerplanar(complete_bipartite(2, 3))

    def test_fan_is_outerplanar(self):
        g = Multigraph(
            ["h", "0", "1", "2", "3"],
            [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)],
        )
        assert is_outerplanar(g)

    def test_minor_oracle_direct(self):
        assert has_minor(complete_graph(4), "K4")
        assert has_minor(complete_graph(5), "K4")
        assert has_minor(complete_bipartite(2, 3), "K23")
        assert not has_minor(cycle_graph(6), "K4")
        assert not has_minor(cycle_graph(6), "K23")
        # subdivided K4 still has a K4 minor
        g = Multigraph(
            list("abcdx"),
            [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (4, 3)],
        )
        assert has_minor(g, "K4")

    def test_oracle_cap(self):
        with pytest.raises(ValueError):
            has_minor(cycle_graph(11), "K4")

    def test_fast_path_matches_oracle_on_small_corpus(self):
        from hamcirc.finite import corpus_graphs

        checked = 0
        for name, g in corpus_graphs().items():
            if g.n_vertices > 8:
                continue
            assert is_outerplanar(g) == outerplanar_by_minor_search(g), name
            checked += 1
        assert checked >= 6

    def test_fast_path_matches_oracle_on_random_graphs(self):
        rng = random.Random(5)
        for _ in range(120):
            n = rng.randrange(3, 8)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            edges = [p for p in pairs if rng.random() < 0.45]
            g = Multigraph([str(i) for i in range(n)], edges)
            assert is_outerplanar(g) == outerplanar_by_minor_search(g)


class TestDotExport:
    def test_empty_graph(self):
        assert Multigraph([], []).to_dot() == "graph {\n}\n"

    def test_single_edge(self):
        dot = Multigraph(["u", "v"], [(0, 1)]).to_dot()
        assert '"u" -- "v";' in dot

    def test_highlight_penwidth(self):
        g = cycle_graph(3)
        dot = g.to_dot(highlight=[1])
        assert dot.count("penwidth") == 1

    def test_deterministic(self):
        g = generalized_petersen(4, 1)
        assert g.to_dot() == g.to_dot()

    def test_tags_become_labels(self):
        g = Multigraph(["u", "v"], [(0, 1, "s")])
        assert 'label="s"' in g.to_dot()


class TestAdjacencyFormat:
    def test_round_trip(self):
        text = "# comment\nu v\nv w\nw u\nx\n"
        g = parse_adjacency(text)
        assert g.labels == ("u", "v", "w", "x")
        assert g.n_edges == 3
        assert g.degree(3) == 0

    def test_bad_line(self):
        with pytest.raises(ValueError):
            parse_adjacency("a b c\n")


class TestSubgraphs:
    def test_induced(self):
        g = complete_graph(4)
        h = g.induced_subgraph([0, 1, 3])
        assert h.n_vertices == 3 and h.n_edges == 3
        assert h.labels == ("0", "1", "3")

    def test_without_edges(self):
        g = cycle_graph(4)
        h = g.without_edges([0])
        assert h.n_edges == 3 and not h.is_cycle()

    def test_simple_support(self):
        g = Multigraph(["x", "y"], [(0, 1, "p"), (0, 1, "q")])
        s = g.simple_support()
        assert s.n_edges == 1 and s.edges[0].tag == "p"
