from cyclelattice.cycle_structure import (
    bridges_and_series_classes,
    cosimplify,
    fundamental_cycle_matrix,
    is_simple_cycle,
    is_three_edge_connected,
    three_edge_connectivity_witness,
)
from cyclelattice.multigraph import parse_edge_list, spanning_forest
from cyclelattice.oracle import enumerate_cycles
from cyclelattice.topo_extension import gen


class TestFundamentalCycleMatrix:
    def test_k4_star_column(self, k4):
        T = spanning_forest(k4)
        fcm = fundamental_cycle_matrix(k4, T)
        assert fcm.columns[3] == frozenset({0, 1})  # 2-1-3 through the root
        assert fcm.columns[4] == frozenset({0, 2})
        assert fcm.columns[5] == frozenset({1, 2})

    def test_b3_columns(self, b3):
        T = spanning_forest(b3)
        fcm = fundamental_cycle_matrix(b3, T)
        assert fcm.columns[1] == frozenset({0})
        assert fcm.columns[2] == frozenset({0})

    def test_loop_zero_column(self, loop_graph):
        T = spanning_forest(loop_graph)
        fcm = fundamental_cycle_matrix(loop_graph, T)
        assert fcm.columns[0] == frozenset()
        assert fcm.cycle_edges(0) == frozenset({0})

    def test_duality_rows_columns(self, k4, tri_pendant):
        for G in (k4, tri_pendant):
            T = spanning_forest(G)
            fcm = fundamental_cycle_matrix(G, T)
            for t in T.tree_edges:
                for e in fcm.columns:
                    assert (t in fcm.columns[e]) == (e in fcm.rows[t])

    def test_columns_are_cycles(self, k4, b3, tri_pendant):
        for G in (k4, b3, tri_pendant):
            fcm = fundamental_cycle_matrix(G, spanning_forest(G))
            for e in fcm.columns:
                assert is_simple_cycle(G, fcm.cycle_edges(e))

    def test_per_component_forest(self):
        G = parse_edge_list("6 6\n1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n")
        fcm = fundamental_cycle_matrix(G, spanning_forest(G))
        assert len(fcm.columns) == 2


class TestBridgesAndSeries:
    def test_triangle_single_class(self, c3):
        part = bridges_and_series_classes(c3)
        assert not part.bridges
        assert part.classes == (frozenset({0, 1, 2}),)

    def test_bridge_only(self, p2):
        part = bridges_and_series_classes(p2)
        assert part.bridges == frozenset({0})
        assert part.classes == ()

    def test_k4_singletons(self, k4):
        part = bridges_and_series_classes(k4)
        assert not part.bridges
        assert sorted(map(sorted, part.classes)) == [[0], [1], [2], [3], [4], [5]]

    def test_loops_are_singleton_classes(self, two_loops):
        part = bridges_and_series_classes(two_loops)
        assert not part.bridges
        assert sorted(map(sorted, part.classes)) == [[0], [1]]

    def test_matches_brute_force_on_small_graphs(self):
        texts = [
            "3 3\n1 2\n2 3\n3 1\n",
            "4 4\n1 2\n2 3\n3 1\n3 4\n",
            "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n",
            "2 3\nu v\nu v\nu v\n",
            "4 5\n1 2\n2 3\n3 4\n4 1\n1 3\n",
            "3 4\n1 2\n1 2\n2 3\n2 3\n",
        ]
        for text in texts:
            G = parse_edge_list(text)
            assert G.m <= 8
            cycles = enumerate_cycles(G)
            by_edge = {
                e: frozenset(i for i, c in enumerate(cycles) if e in c)
                for e in G.edges
            }
            expected_bridges = {e for e, s in by_edge.items() if not s}
            groups: dict[frozenset, set] = {}
            for e, s in by_edge.items():
                if s:
                    groups.setdefault(s, set()).add(e)
            expected_classes = sorted(map(sorted, groups.values()))
            part = bridges_and_series_classes(G)
            assert part.bridges == frozenset(expected_bridges), text
            assert sorted(map(sorted, part.classes)) == expected_classes, text


class TestCosimplify:
    def test_triangle_collapses_to_loop(self, c3):
        cos = cosimplify(c3)
        assert cos.hat_graph.n == 1
        assert cos.hat_graph.m == 1
        (e,) = cos.hat_graph.edges
        assert cos.hat_graph.is_loop(e)
        assert all(cos.projection[x] == e for x in c3.edges)
        assert cos.section[e] == frozenset({0, 1, 2})

    def test_k4_unchanged(self, k4):
        cos = cosimplify(k4)
        assert cos.hat_graph.m == 6
        assert all(cos.projection[e] == e for e in k4.edges)

    def test_bridge_projects_to_epsilon(self, p2):
        cos = cosimplify(p2)
        assert cos.hat_graph.m == 0
        assert cos.hat_graph.n == 2
        assert cos.projection[0] is None

    def test_forest_aware_contraction_uses_tree_edges_only(self, c3):
        T = spanning_forest(c3)
        cos = cosimplify(c3, forest=T)
        contracted = set(c3.edges) - set(cos.hat_graph.edges)
        assert contracted <= T.tree_edges
        # representative is the class's non-tree edge
        (e,) = cos.hat_graph.edges
        assert e not in T.tree_edges

    def test_components_are_three_edge_connected(self, tri_pendant, c3, p2):
        from cyclelattice.multigraph import component_subgraphs

        for G in (tri_pendant, c3, p2):
            cos = cosimplify(G)
            for comp in component_subgraphs(cos.hat_graph):
                assert is_three_edge_connected(comp)


class TestThreeEdgeConnectivity:
    def test_fixtures(self, k4, b3, c3, p2, loop_graph):
        assert is_three_edge_connected(k4)
        assert is_three_edge_connected(b3)
        assert not is_three_edge_connected(c3)
        assert not is_three_edge_connected(p2)
        assert is_three_edge_connected(loop_graph)

    def test_single_vertex_no_loops(self):
        G = parse_edge_list("1 0\n")
        assert is_three_edge_connected(G)

    def test_witnesses(self, c3, p2):
        kind, detail = three_edge_connectivity_witness(c3)
        assert kind == "series" and detail == frozenset({0, 1, 2})
        kind, detail = three_edge_connectivity_witness(p2)
        assert kind == "bridge" and detail == 0

    def test_disconnected_witness(self):
        G = parse_edge_list("4 2\n1 2\n3 4\n")
        kind, detail = three_edge_connectivity_witness(G)
        assert kind == "disconnected" and detail == 2

    def test_b3_survives_two_deletions(self, b3):
        # independent confirmation: delete any 2 of the 3 parallel edges
        from itertools import combinations

        from cyclelattice.multigraph import is_connected, minor

        for pair in combinations(b3.edges, 2):
            assert is_connected(minor(b3, delete=set(pair), contract=set()).result)

    def test_generated_graphs_are_three_edge_connected(self):
        for seed in range(10):
            assert is_three_edge_connected(gen(steps=6, seed=seed, max_vertices=9))


class TestIsSimpleCycle:
    def test_basics(self, k4, b3, loop_graph):
        assert is_simple_cycle(k4, {0, 1, 3})
        assert is_simple_cycle(b3, {0, 1})
        assert is_simple_cycle(loop_graph, {0})
        assert not is_simple_cycle(k4, {0, 1})
        assert not is_simple_cycle(k4, set())
        # two disjoint triangles are not a single cycle
        G = parse_edge_list("6 6\n1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n")
        assert not is_simple_cycle(G, {0, 1, 2, 3, 4, 5})
