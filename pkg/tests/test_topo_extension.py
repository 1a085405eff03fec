import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclelattice.cycle_structure import is_simple_cycle, is_three_edge_connected
from cyclelattice.errors import ArgumentError
from cyclelattice.lattice_basis import EdgeVector, certify_cycle_basis, matches_all_cycles_lattice
from cyclelattice.multigraph import parse_edge_list
from cyclelattice.oracle import IntegerMatrix, exact_determinant
from cyclelattice.topo_extension import (
    EdgeSplit,
    ExtensionStep,
    apply_extension,
    compatible_chain,
    embed_cycle,
    embed_vector,
    extend_basis,
    extension_sequence,
    gen,
)

SINGLE_VERTEX = parse_edge_list("1 0\n")


def _replay_matches(G, seq):
    graphs = seq.replay()
    final = graphs[-1]
    em, vm = seq.edge_map, seq.vertex_map
    rebuilt = {em[r]: tuple(sorted((vm[u], vm[v]))) for r, (u, v) in final.edges.items()}
    return rebuilt == {e: tuple(sorted(uv)) for e, uv in G.edges.items()}


class TestApplyExtension:
    def test_loop_on_single_vertex(self):
        step = ExtensionStep(kind="A", new_edge=0, endpoints=(1, 1))
        G = apply_extension(parse_edge_list("1 0\n"), step)
        assert G.n == 1 and G.m == 1 and G.is_loop(0)

    def test_split_loop_gives_theta_degrees(self, loop_graph):
        (v,) = loop_graph.vertices
        split = EdgeSplit(old=0, first=10, second=11, vertex=99)
        step = ExtensionStep(kind="B", new_edge=12, endpoints=(99, v), split_f=split)
        G = apply_extension(loop_graph, step)
        assert sorted(G.degree(x) for x in G.vertices) == [3, 3]

    def test_bond_type_c_gives_k4(self, b3):
        # dividing two of the three parallel edges and joining the new
        # vertices produces the complete graph on four vertices
        split_f = EdgeSplit(old=0, first=10, second=11, vertex=8)
        split_g = EdgeSplit(old=1, first=12, second=13, vertex=9)
        step = ExtensionStep(
            kind="C", new_edge=14, endpoints=(8, 9), split_f=split_f, split_g=split_g
        )
        G = apply_extension(b3, step)
        assert G.n == 4 and G.m == 6
        pairs = {tuple(sorted(uv)) for uv in G.edges.values()}
        assert len(pairs) == 6  # simple: every pair of the 4 vertices once
        assert all(G.degree(v) == 3 for v in G.vertices)
        assert is_three_edge_connected(G)

    def test_surviving_ids_kept(self, b3):
        split = EdgeSplit(old=0, first=10, second=11, vertex=8)
        step = ExtensionStep(kind="B", new_edge=12, endpoints=(8, b3.vertices[0]), split_f=split)
        G = apply_extension(b3, step)
        assert {1, 2} <= set(G.edges)
        assert 0 not in G.edges

    def test_dangling_references(self, b3):
        split = EdgeSplit(old=77, first=10, second=11, vertex=8)
        step = ExtensionStep(kind="B", new_edge=12, endpoints=(8, b3.vertices[0]), split_f=split)
        with pytest.raises(ArgumentError):
            apply_extension(b3, step)

    def test_kind_c_same_edge_rejected(self):
        split_f = EdgeSplit(old=0, first=10, second=11, vertex=8)
        split_g = EdgeSplit(old=0, first=12, second=13, vertex=9)
        with pytest.raises(ArgumentError):
            ExtensionStep(
                kind="C", new_edge=14, endpoints=(8, 9), split_f=split_f, split_g=split_g
            )

    def test_step_json_round_trip(self, b3):
        split = EdgeSplit(old=0, first=10, second=11, vertex=8)
        step = ExtensionStep(kind="B", new_edge=12, endpoints=(8, b3.vertices[1]), split_f=split)
        assert ExtensionStep.from_json(step.to_json()) == step


class TestEmbedVector:
    def test_kind_a_appends_zero(self, b3):
        step = ExtensionStep(kind="A", new_edge=9, endpoints=(b3.vertices[0], b3.vertices[1]))
        G = apply_extension(b3, step)
        x = EdgeVector.indicator(b3, [0, 1])
        y = embed_vector(step, x, G)
        assert y.coords == {0: 1, 1: 1, 2: 0, 9: 0}

    def test_kind_b_duplicates(self, b3):
        split = EdgeSplit(old=0, first=10, second=11, vertex=8)
        step = ExtensionStep(kind="B", new_edge=12, endpoints=(8, b3.vertices[0]), split_f=split)
        x = EdgeVector(graph=b3, coords={0: 1, 1: 0, 2: 0})
        y = embed_vector(step, x)
        assert y.coords == {10: 1, 11: 1, 1: 0, 2: 0, 12: 0}

    def test_kind_c_zero_maps_to_zero(self, b3):
        split_f = EdgeSplit(old=0, first=10, second=11, vertex=8)
        split_g = EdgeSplit(old=1, first=12, second=13, vertex=9)
        step = ExtensionStep(
            kind="C", new_edge=14, endpoints=(8, 9), split_f=split_f, split_g=split_g
        )
        y = embed_vector(step, EdgeVector.zero(b3))
        assert y.is_zero()

    @given(
        st.lists(st.integers(-5, 5), min_size=3, max_size=3),
        st.lists(st.integers(-5, 5), min_size=3, max_size=3),
    )
    def test_linearity(self, a, b):
        G = parse_edge_list("2 3\nu v\nu v\nu v\n")
        split = EdgeSplit(old=0, first=10, second=11, vertex=8)
        step = ExtensionStep(kind="B", new_edge=12, endpoints=(8, G.vertices[0]), split_f=split)
        H = apply_extension(G, step)
        order = list(G.sorted_edges)
        xa = EdgeVector(graph=G, coords=dict(zip(order, a)))
        xb = EdgeVector(graph=G, coords=dict(zip(order, b)))
        assert embed_vector(step, xa + xb, H) == embed_vector(step, xa, H) + embed_vector(
            step, xb, H
        )

    def test_embedded_cycles_stay_cycles(self, b3):
        split = EdgeSplit(old=0, first=10, second=11, vertex=8)
        step = ExtensionStep(kind="B", new_edge=12, endpoints=(8, b3.vertices[0]), split_f=split)
        G = apply_extension(b3, step)
        for cyc in ({0, 1}, {0, 2}, {1, 2}):
            image = embed_cycle(step, frozenset(cyc))
            assert is_simple_cycle(G, image)


class TestExtensionSequence:
    def test_single_loop(self, loop_graph):
        seq = extension_sequence(loop_graph)
        assert [s.kind for s in seq.steps] == ["A"]
        assert _replay_matches(loop_graph, seq)

    def test_b3(self, b3):
        seq = extension_sequence(b3)
        assert _replay_matches(b3, seq)
        assert all(is_three_edge_connected(H) for H in seq.replay())

    def test_k4(self, k4):
        seq = extension_sequence(k4)
        assert _replay_matches(k4, seq)
        assert all(is_three_edge_connected(H) for H in seq.replay())

    def test_single_vertex(self):
        seq = extension_sequence(SINGLE_VERTEX)
        assert seq.steps == ()

    def test_not_three_edge_connected_rejected(self, c3):
        from cyclelattice.errors import PreconditionError

        with pytest.raises(PreconditionError):
            extension_sequence(c3)

    def test_random_corpus(self):
        for seed in range(25):
            G = gen(steps=3 + seed % 7, seed=seed, max_vertices=10)
            seq = extension_sequence(G)
            assert _replay_matches(G, seq), seed
            assert all(is_three_edge_connected(H) for H in seq.replay()), seed


class TestExtendBasis:
    def test_kind_a_parallel_edge_keeps_determinant(self, b3):
        u, v = b3.vertices
        step = ExtensionStep(kind="A", new_edge=9, endpoints=(u, v))
        G = apply_extension(b3, step)
        from cyclelattice.lattice_basis import semi_fundamental_basis

        basis, _ = semi_fundamental_basis(b3)
        new = extend_basis(b3, basis, step)
        assert len(new) == 1
        vectors = [{e: 1 for e in c} for c in basis.cycles] + [
            {e: 1 for e in c} for c in new
        ]
        M = IntegerMatrix.from_vectors(vectors, list(G.sorted_edges))
        assert abs(exact_determinant(M)) == 2  # n unchanged

    def test_determinant_multipliers(self, b3):
        from cyclelattice.lattice_basis import semi_fundamental_basis

        basis, _ = semi_fundamental_basis(b3)
        base_vectors = [{e: 1 for e in c} for c in basis.cycles]
        u, v = b3.vertices

        split = EdgeSplit(old=0, first=10, second=11, vertex=8)
        step_b = ExtensionStep(kind="B", new_edge=12, endpoints=(8, v), split_f=split)
        G = apply_extension(b3, step_b)
        new = extend_basis(b3, basis, step_b)
        assert len(new) == 2
        embedded = [embed_vector(step_b, EdgeVector(graph=b3, coords=vec), G).coords for vec in base_vectors]
        vectors = embedded + [{e: 1 for e in c} for c in new]
        M = IntegerMatrix.from_vectors(vectors, list(G.sorted_edges))
        assert abs(exact_determinant(M)) == 4  # previous det 2, multiplier 2

        split_f = EdgeSplit(old=0, first=10, second=11, vertex=8)
        split_g = EdgeSplit(old=1, first=12, second=13, vertex=9)
        step_c = ExtensionStep(
            kind="C", new_edge=14, endpoints=(8, 9), split_f=split_f, split_g=split_g
        )
        G = apply_extension(b3, step_c)
        new = extend_basis(b3, basis, step_c)
        assert len(new) == 3
        embedded = [embed_vector(step_c, EdgeVector(graph=b3, coords=vec), G).coords for vec in base_vectors]
        vectors = embedded + [{e: 1 for e in c} for c in new]
        M = IntegerMatrix.from_vectors(vectors, list(G.sorted_edges))
        assert abs(exact_determinant(M)) == 8  # previous det 2, multiplier 4

    def test_loop_extension_uses_loop_cycle(self, b3):
        u, _ = b3.vertices
        step = ExtensionStep(kind="A", new_edge=9, endpoints=(u, u))
        new = extend_basis(b3, None, step)
        assert new == [frozenset({9})]

    def test_new_cycles_are_cycles_of_extension(self, k4):
        from cyclelattice.lattice_basis import semi_fundamental_basis

        basis, _ = semi_fundamental_basis(k4)
        split_f = EdgeSplit(old=0, first=10, second=11, vertex=8)
        split_g = EdgeSplit(old=5, first=12, second=13, vertex=9)
        step = ExtensionStep(
            kind="C", new_edge=14, endpoints=(8, 9), split_f=split_f, split_g=split_g
        )
        G = apply_extension(k4, step)
        for cyc in extend_basis(k4, basis, step):
            assert is_simple_cycle(G, cyc)


class TestCompatibleChain:
    def test_single_loop(self, loop_graph):
        chain = compatible_chain(loop_graph)
        assert len(chain.bases) == 2
        assert [sorted(c) for c in chain.final_basis.cycles] == [[0]]

    def test_b3_sizes_and_det(self, b3):
        chain = compatible_chain(b3)
        for H, basis in zip(chain.graphs, chain.bases):
            assert len(basis.cycles) == H.m
        det, ok = certify_cycle_basis(b3, chain.final_basis)
        assert ok and abs(det) == 2

    def test_k4_final(self, k4):
        chain = compatible_chain(k4)
        assert len(chain.final_basis.cycles) == 6
        det, ok = certify_cycle_basis(k4, chain.final_basis)
        assert ok and abs(det) == 8
        assert matches_all_cycles_lattice(k4, chain.final_basis.cycles)

    def test_nestedness(self, k4, b3):
        for G in (k4, b3):
            chain = compatible_chain(G)
            for i, step in enumerate(chain.sequence.steps):
                embedded = {embed_cycle(step, c) for c in chain.bases[i].cycles}
                assert embedded <= set(chain.bases[i + 1].cycles)

    def test_prefix_determinant_law(self, k4):
        chain = compatible_chain(k4)
        prev = 1
        for step, H, basis in zip(chain.sequence.steps, chain.graphs[1:], chain.bases[1:]):
            M = IntegerMatrix.from_vectors(
                [{e: 1 for e in c} for c in basis.cycles], list(H.sorted_edges)
            )
            det = abs(exact_determinant(M))
            assert det == 2 ** (H.n - 1)
            assert det == prev * {"A": 1, "B": 2, "C": 4}[step.kind]
            prev = det

    def test_tree_maintained(self, k4):
        chain = compatible_chain(k4)
        assert len(chain.tree.tree_edges) == k4.n - 1

    def test_without_prefixes(self, k4):
        chain = compatible_chain(k4, keep_prefixes=False)
        assert chain.bases == ()
        det, ok = certify_cycle_basis(k4, chain.final_basis)
        assert ok

    def test_random_corpus(self):
        for seed in range(10):
            G = gen(steps=3 + seed % 5, seed=seed + 100, max_vertices=9)
            chain = compatible_chain(G)
            det, ok = certify_cycle_basis(G, chain.final_basis)
            assert ok, seed
            for i, step in enumerate(chain.sequence.steps):
                embedded = {embed_cycle(step, c) for c in chain.bases[i].cycles}
                assert embedded <= set(chain.bases[i + 1].cycles), (seed, i)


class TestGen:
    def test_deterministic(self):
        a = gen(steps=7, seed=5)
        b = gen(steps=7, seed=5)
        assert a.edges == b.edges and a.vertices == b.vertices

    def test_always_three_edge_connected(self):
        for seed in range(20):
            assert is_three_edge_connected(gen(steps=5, seed=seed))

    def test_max_vertices_respected(self):
        for seed in range(10):
            assert gen(steps=12, seed=seed, max_vertices=6).n <= 6

    def test_size_arithmetic(self):
        G = gen(steps=9, seed=3)
        assert G.m - G.n == 9 - 1
