import pytest

from sparing.errors import InvalidParam, UnknownPartition
from sparing.families import FamilySpec, generate, make, partition_of, random_graph
from sparing.graphs import edges_within, is_bipartite, is_independent, validate


class TestCounting:
    def test_complete_sun(self):
        g = make("complete_sun", n=3).graph
        assert (g.n, g.edge_count) == (6, 9)

    def test_windmill(self):
        lg = make("windmill", n=3, r=2)
        assert (lg.graph.n, lg.graph.edge_count) == (5, 6)
        assert partition_of(lg, "hub") == frozenset({0})
        # the shared vertex touches everything
        assert lg.graph.degree(0) == 4

    def test_cone(self):
        g = make("cone", m=4, n=2).graph
        assert (g.n, g.edge_count) == (6, 12)

    def test_complete_split(self):
        g = make("complete_split", r=3, s=2).graph
        assert (g.n, g.edge_count) == (5, 9)

    def test_cycle_too_small(self):
        with pytest.raises(InvalidParam):
            make("cycle", n=2)

    @pytest.mark.parametrize(
        "n,r", [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]
    )
    def test_windmill_counts(self, n, r):
        g = make("windmill", n=n, r=r).graph
        assert g.n == r * (n - 1) + 1
        assert g.edge_count == r * n * (n - 1) // 2

    @pytest.mark.parametrize("sizes", [[2], [3, 4], [2, 2, 2], [4, 3, 2], [3, 3, 3, 3]])
    def test_block_chain_counts(self, sizes):
        g = make("block_chain", cliques=sizes).graph
        assert g.n == 1 + sum(s - 1 for s in sizes)
        assert g.edge_count == sum(s * (s - 1) // 2 for s in sizes)

    @pytest.mark.parametrize("lengths", [[3], [3, 4], [5, 3, 4], [3, 3, 3]])
    def test_cactus_chain_counts(self, lengths):
        g = make("cactus_chain", cycles=lengths).graph
        assert g.n == 1 + sum(l - 1 for l in lengths)
        assert g.edge_count == sum(lengths)
        assert all(g.degree(v) in (2, 4) for v in range(g.n))


class TestPartitions:
    def test_sun_rim(self):
        assert partition_of(make("complete_sun", n=3), "W") == frozenset({3, 4, 5})

    def test_wheel_hub(self):
        assert partition_of(make("wheel", m=4), "hub") == frozenset({4})

    def test_unknown_partition(self):
        with pytest.raises(UnknownPartition):
            partition_of(make("cycle", n=5), "X")

    def test_partitions_cover_and_are_disjoint(self):
        for lg in (
            make("complete_sun", n=5),
            make("complete_split", r=4, s=3),
            make("complete_bisplit", parts=[2, 3, 4]),
            make("wheel", m=6),
            make("cone", m=5, n=2),
            make("windmill", n=4, r=3),
            make("complete_bipartite", parts=[3, 2]),
        ):
            union = set()
            total = 0
            for part in lg.partitions.values():
                total += len(part)
                union |= part
            assert union == set(range(lg.graph.n))
            assert total == lg.graph.n


class TestStructure:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_sun_rim_independent_with_degree_two(self, n):
        lg = make("complete_sun", n=n)
        rim = partition_of(lg, "W")
        assert is_independent(lg.graph, rim)
        assert all(lg.graph.degree(w) == 2 for w in rim)
        clique = partition_of(lg, "U")
        assert len(edges_within(lg.graph, clique)) == n * (n - 1) // 2

    @pytest.mark.parametrize("r,s", [(2, 1), (3, 2), (4, 3), (5, 2)])
    def test_complete_split_structure(self, r, s):
        lg = make("complete_split", r=r, s=s)
        clique = partition_of(lg, "clique")
        indep = partition_of(lg, "independent")
        assert len(edges_within(lg.graph, clique)) == r * (r - 1) // 2
        assert is_independent(lg.graph, indep)
        assert all(lg.graph.degree(v) == r for v in indep)

    def test_complete_bisplit_is_complete_tripartite(self):
        lg = make("complete_bisplit", parts=[2, 3, 4])
        parts = [partition_of(lg, name) for name in ("X", "Y", "Z")]
        for part in parts:
            assert is_independent(lg.graph, part)
        for i in range(3):
            for j in range(i + 1, 3):
                for u in parts[i]:
                    for v in parts[j]:
                        assert lg.graph.has_edge(u, v)

    def test_general_split_adjacency(self):
        lg = make("split", r=3, adjacency=[(0, 1), (2,)])
        g = lg.graph
        assert g.n == 5
        assert g.has_edge(0, 3) and g.has_edge(1, 3) and g.has_edge(2, 4)
        assert not g.has_edge(2, 3) and not g.has_edge(0, 4)
        assert is_independent(g, partition_of(lg, "independent"))

    def test_general_bisplit(self):
        # X = {0}, Y = {1, 2}, Z = {3}; the lone X vertex sees one Y and one Z vertex
        lg = make("bisplit", y=2, z=1, adjacency=[(0, 2)])
        g = lg.graph
        assert g.has_edge(0, 1) and g.has_edge(0, 3) and not g.has_edge(0, 2)
        # Y-Z biclique is always present
        assert g.has_edge(1, 3) and g.has_edge(2, 3)
        for name in ("X", "Y", "Z"):
            assert is_independent(g, partition_of(lg, name))

    def test_friendship_is_triangle_windmill(self):
        assert make("friendship", r=3).graph == make("windmill", n=3, r=3).graph

    def test_block_chain_cliques_share_at_most_one_vertex(self):
        sizes = [3, 4, 2, 3]
        g = make("block_chain", cliques=sizes).graph
        start = 0
        blocks = []
        for size in sizes:
            blocks.append(set(range(start, start + size)))
            start += size - 1
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                assert len(blocks[i] & blocks[j]) <= 1

    def test_cactus_cycles_edge_disjoint(self):
        lengths = [3, 4, 5]
        g = make("cactus_chain", cycles=lengths).graph
        start = 0
        rings = []
        for length in lengths:
            ring = set(range(start, start + length))
            rings.append(set(edges_within(g, ring)))
            start += length - 1
        assert sum(len(r) for r in rings) == g.edge_count
        for i in range(len(rings)):
            for j in range(i + 1, len(rings)):
                assert not rings[i] & rings[j]

    def test_bipartite_families_are_bipartite(self):
        for lg in (
            make("path", n=6),
            make("cycle", n=8),
            make("complete_bipartite", parts=[3, 4]),
        ):
            assert is_bipartite(lg.graph) is not None

    def test_all_generated_graphs_validate(self):
        for lg in (
            make("path", n=1),
            make("complete", n=1),
            make("complete_multipartite", parts=[1, 1, 2, 3]),
            make("cactus_chain", cycles=[3, 3]),
            make("block_chain", cliques=[2, 4]),
        ):
            validate(lg.graph)


class TestSpecStrings:
    def test_param_string_order(self):
        spec = FamilySpec("cone", {"m": 4, "n": 2})
        assert spec.param_string() == "m=4,n=2"
        assert str(spec) == "family=cone;params=m=4,n=2"

    def test_list_params(self):
        assert FamilySpec("block_chain", {"cliques": [3, 4]}).param_string() == "cliques=3,4"

    def test_unknown_family_rejected(self):
        with pytest.raises(InvalidParam):
            generate(FamilySpec("hypercube", {"n": 3}))

    @pytest.mark.parametrize(
        "family,params",
        [
            ("cycle", {"n": 2}),
            ("complete", {"n": 0}),
            ("complete_sun", {"n": 2}),
            ("windmill", {"n": 1, "r": 2}),
            ("windmill", {"n": 3, "r": 1}),
            ("friendship", {"r": 1}),
            ("wheel", {"m": 2}),
            ("cone", {"m": 2, "n": 1}),
            ("cone", {"m": 3, "n": 0}),
            ("block_chain", {"cliques": [1, 3]}),
            ("cactus_chain", {"cycles": [2]}),
            ("complete_split", {"r": 0, "s": 1}),
            ("complete_bipartite", {"parts": [0, 2]}),
            ("complete_bipartite", {"parts": [1, 2, 3]}),
        ],
    )
    def test_domain_violations(self, family, params):
        with pytest.raises(InvalidParam):
            generate(FamilySpec(family, params))

    def test_missing_param_names_flag(self):
        with pytest.raises(InvalidParam, match="requires parameter n"):
            make("cycle")


class TestRandomGraph:
    def test_deterministic(self):
        assert random_graph(8, 0.4, 11) == random_graph(8, 0.4, 11)

    def test_density_extremes(self):
        assert random_graph(6, 0.0, 1).edge_count == 0
        assert random_graph(6, 1.0, 1).edge_count == 15

    def test_validates(self):
        validate(random_graph(12, 0.5, 3))
