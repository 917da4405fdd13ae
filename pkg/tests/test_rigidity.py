import pytest

from deltamatroids import (
    CORPUS,
    DeltaMatroid,
    InputError,
    Multigraph,
    Subset,
    cone,
    cycle_matroid,
    is_pairable,
    is_quotient,
    is_sparse_23,
    rigidity_feasible_family,
    rigidity_matroid,
    verify_cone_quotient,
)


def triangle():
    return CORPUS["triangle"]


class TestMultigraph:
    def test_validation(self):
        with pytest.raises(InputError):
            Multigraph.build("uv", [("e1", "u", "w")])
        with pytest.raises(InputError):
            Multigraph.build("uu", [])
        with pytest.raises(InputError):
            Multigraph.build("uv", [("e1", "u", "v"), ("e1", "v", "u")])

    def test_loops_and_parallel_detection(self):
        loop = Multigraph.build("u", [("e1", "u", "u")])
        par = Multigraph.build("uv", [("e1", "u", "v"), ("e2", "u", "v")])
        assert loop.has_loop() and not loop.has_parallel()
        assert par.has_parallel() and not par.has_loop()
        assert triangle().is_simple()

    def test_connectivity(self):
        assert triangle().is_connected()
        two = Multigraph.build("uvwx", [("e1", "u", "v"), ("e2", "w", "x")])
        assert not two.is_connected()


class TestCycleMatroid:
    def test_triangle(self):
        m = cycle_matroid(triangle())
        assert sorted(sorted(b.labels) for b in m.bases) == [
            ["e1", "e2"],
            ["e1", "e3"],
            ["e2", "e3"],
        ]
        assert [sorted(c.labels) for c in m.circuits()] == [["e1", "e2", "e3"]]

    def test_single_loop_is_a_one_circuit(self):
        g = Multigraph.build("u", [("e1", "u", "u")])
        m = cycle_matroid(g)
        assert m.rank == 0
        assert [list(c.labels) for c in m.circuits()] == [["e1"]]

    def test_parallel_pair_is_a_two_circuit(self):
        g = Multigraph.build("uv", [("d", "u", "v"), ("b", "u", "v")])
        m = cycle_matroid(g)
        assert sorted(c.labels for c in m.circuits()) == [("d", "b")]

    def test_forest_oracle(self):
        # independent sets of the cycle matroid are exactly the forests
        g = CORPUS["c4_with_chord"]
        m = cycle_matroid(g)
        for mask in g.ground.all_masks():
            assert m.is_independent(Subset(g.ground, mask)) == g.is_forest(mask)


class TestSparsity:
    def test_triangle_meets_count_with_equality(self):
        g = triangle()
        assert is_sparse_23(g, g.ground.subset(g.ground.labels))

    def test_k4_is_overbraced(self):
        g = CORPUS["k4"]
        assert not is_sparse_23(g, g.ground.subset(g.ground.labels))
        # 6 edges on 4 vertices: 6 > 2*4 - 3

    def test_empty_set_vacuously_sparse(self):
        g = triangle()
        assert is_sparse_23(g, g.ground.subset())

    def test_loop_and_parallel_violate(self):
        loop = Multigraph.build("uv", [("e1", "u", "u"), ("e2", "u", "v")])
        assert not is_sparse_23(loop, loop.ground.subset(["e1"]))
        par = Multigraph.build("uv", [("e1", "u", "v"), ("e2", "u", "v")])
        assert not is_sparse_23(par, par.ground.subset(["e1", "e2"]))

    def test_downward_closed_on_corpus(self):
        for g in CORPUS.values():
            sparse = {m for m in g.ground.all_masks() if is_sparse_23(g, Subset(g.ground, m))}
            for m in sparse:
                sub = m
                while sub:
                    sub = (sub - 1) & m
                    assert sub in sparse


class TestRigidityMatroid:
    def test_k4_rigidity_circuit_is_everything(self):
        m = rigidity_matroid(CORPUS["k4"])
        assert [c.mask for c in m.circuits()] == [m.ground.full_mask]

    def test_triangle_is_independent(self):
        g = triangle()
        m = rigidity_matroid(g)
        assert m.is_independent(g.ground.subset(g.ground.labels))

    def test_cone_of_cycle_is_rigidity_circuit(self):
        # the cone of a connectivity cycle is a circuit of the rigidity matroid
        for name in ("triangle", "c5"):
            g = CORPUS[name]
            result = cone(g)
            mr = rigidity_matroid(result.cone_graph)
            full = Subset(result.cone_graph.ground, result.cone_graph.ground.full_mask)
            assert full in mr.circuits()


class TestFeasibleFamily:
    def test_triangle_family(self):
        fam = rigidity_feasible_family(triangle())
        assert [sorted(s.labels) for s in fam] == [
            ["e1", "e2"],
            ["e1", "e3"],
            ["e2", "e3"],
            ["e1", "e2", "e3"],
        ]

    def test_tree_has_single_feasible(self):
        fam = rigidity_feasible_family(CORPUS["path_p3"])
        assert fam.member_labels() == [["e1", "e2"]]

    def test_k4_excludes_full_edge_set(self):
        g = CORPUS["k4"]
        fam = rigidity_feasible_family(g)
        assert g.ground.subset(g.ground.labels) not in fam

    def test_disconnected_rejected(self):
        g = Multigraph.build("uvwx", [("e1", "u", "v"), ("e2", "w", "x")])
        with pytest.raises(InputError):
            rigidity_feasible_family(g)

    def test_nonsimple_rejected(self):
        g = Multigraph.build("uv", [("e1", "u", "v"), ("e2", "u", "v")])
        with pytest.raises(InputError):
            rigidity_feasible_family(g)

    def test_corpus_families_certify_with_expected_upper_lower(self):
        for name, g in CORPUS.items():
            fam = rigidity_feasible_family(g)
            d = DeltaMatroid.certify(fam)
            assert d.lower == cycle_matroid(g), name
            # upper bases: maximal-size feasible sets, i.e. spanning-connected
            # bases of the rigidity matroid
            mr = rigidity_matroid(g)
            want = [b for b in mr.bases.masks if g.is_connected_spanning(b)]
            assert list(d.upper.bases.masks) == want, name

    def test_corpus_pairs_are_pairable(self):
        for name, g in CORPUS.items():
            fam = rigidity_feasible_family(g)
            d = DeltaMatroid.certify(fam)
            assert is_pairable(d.upper, d.lower).pairable, name


class TestCone:
    def test_triangle_cone_is_k4(self):
        g = triangle()
        result = cone(g)
        assert len(result.cone_graph.vertices) == 4
        assert len(result.cone_graph.edges) == 6
        assert len(result.cone_edges) == 3
        assert result.cone_graph.is_simple()

    def test_single_vertex_cone_is_an_edge(self):
        g = Multigraph.build("u", [])
        result = cone(g)
        assert len(result.cone_graph.vertices) == 2
        assert len(result.cone_graph.edges) == 1

    def test_shape_counts(self):
        for g in CORPUS.values():
            result = cone(g)
            assert len(result.cone_graph.vertices) == len(g.vertices) + 1
            assert len(result.cone_graph.edges) == len(g.edges) + len(g.vertices)
            assert result.cone_graph.ground.labels[: len(g.edges)] == g.ground.labels

    def test_apex_label_avoids_collisions(self):
        g = Multigraph.build(("x0", "v"), [("e1", "x0", "v")])
        result = cone(g)
        assert len(set(result.cone_graph.vertices)) == 3


class TestConeQuotient:
    def test_triangle_identities(self):
        rep = verify_cone_quotient(triangle())
        assert rep.deletion_identity and rep.contraction_identity

    def test_path_identities(self):
        rep = verify_cone_quotient(CORPUS["path_p3"])
        assert rep.both_hold

    def test_whole_corpus(self):
        for name, g in CORPUS.items():
            assert verify_cone_quotient(g).both_hold, name

    def test_contracting_cone_edges_of_k4_gives_triangle_cycles(self):
        # K4 viewed as the cone of the triangle: contracting the cone edges
        # in its rigidity matroid leaves the triangle's cycle matroid
        g = triangle()
        result = cone(g)
        mr = rigidity_matroid(result.cone_graph)
        contracted = mr.contract(result.cone_edges)
        assert contracted.bases.masks == cycle_matroid(g).bases.masks

    def test_cycle_is_quotient_of_rigidity_on_corpus(self):
        for name, g in CORPUS.items():
            assert is_quotient(cycle_matroid(g), rigidity_matroid(g)), name
