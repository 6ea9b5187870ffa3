import pytest

from sparing.claims import (
    catalog,
    check_claim,
    claim_by_id,
    odd_cycle_block_count,
    predicted_value,
)
from sparing.errors import DomainError, MissingGraph
from sparing.families import FamilySpec, generate, make
from sparing.graphs import graph_from_edges
from sparing.solver import sparing_exact


class TestCatalog:
    def test_sixteen_claims(self):
        cat = catalog()
        assert len(cat) == 16
        assert [c.id for c in cat] == [f"C{i}" for i in range(1, 17)]

    def test_lookup(self):
        assert claim_by_id("C9").family == "block_chain"
        with pytest.raises(KeyError):
            claim_by_id("C17")

    def test_graph_dependent_flags(self):
        needs = {c.id for c in catalog() if c.needs_graph}
        assert needs == {"C5", "C7", "C14"}


class TestPredicted:
    def test_complete(self):
        assert predicted_value(claim_by_id("C1"), {"n": 5}) == 6

    def test_cone(self):
        assert predicted_value(claim_by_id("C16"), {"m": 7, "n": 3}) == 7

    def test_blocks(self):
        assert predicted_value(claim_by_id("C9"), {"cliques": [3, 4]}) == 4

    def test_tripartite(self):
        assert predicted_value(claim_by_id("C8"), {"a": 2, "b": 2, "c": 5}) == 4

    def test_sun(self):
        assert predicted_value(claim_by_id("C4"), {"n": 4}) == 5

    def test_wheel_rounding(self):
        claim = claim_by_id("C15")
        assert [predicted_value(claim, {"m": m}) for m in (3, 4, 5, 6, 7)] == [1, 2, 2, 3, 3]

    def test_odd_cycle_domain(self):
        with pytest.raises(DomainError):
            predicted_value(claim_by_id("C2"), {"n": 6})

    def test_missing_parameter(self):
        with pytest.raises(DomainError):
            predicted_value(claim_by_id("C16"), {"m": 4})

    def test_graph_dependent_needs_instance(self):
        with pytest.raises(MissingGraph):
            predicted_value(claim_by_id("C5"), {"r": 3, "s": 2})

    def test_split_counts_triangles_through_best_vertex(self):
        claim = claim_by_id("C5")
        lg = make("complete_split", r=3, s=2)
        # each clique vertex sits in 1 clique triangle plus 2 apex triangles
        assert predicted_value(claim, {"r": 3, "s": 2}, lg) == 5

    def test_general_split_instance(self):
        claim = claim_by_id("C5")
        lg = make("split", r=3, adjacency=[(0, 1)])
        # vertex 2 sees only the clique triangle
        assert predicted_value(claim, {"r": 3, "s": 1}, lg) == 1

    def test_bisplit_cross_paths(self):
        claim = claim_by_id("C7")
        lg = make("complete_bisplit", parts=[1, 2, 3])
        assert predicted_value(claim, {"x": 1, "y": 2, "z": 3}, lg) == 6

    def test_bisplit_on_general_instance(self):
        claim = claim_by_id("C7")
        # lone X vertex adjacent to one Y vertex and one Z vertex: one cross path
        lg = make("bisplit", y=2, z=2, adjacency=[(0, 2)])
        assert predicted_value(claim, {"x": 1, "y": 2, "z": 2}, lg) == 1

    def test_shadow_doubles_base(self):
        base = FamilySpec("cycle", {"n": 5})
        assert predicted_value(claim_by_id("C12"), {"base": base}) == 2


class TestOddCycleBlocks:
    def test_cactus_chain(self):
        g = make("cactus_chain", cycles=[3, 4, 5]).graph
        assert odd_cycle_block_count(g) == 2

    def test_tree_has_none(self):
        assert odd_cycle_block_count(make("path", n=6).graph) == 0

    def test_disconnected(self):
        from sparing.graphs import disjoint_union

        g = disjoint_union(make("cycle", n=3).graph, make("cycle", n=7).graph)
        assert odd_cycle_block_count(g) == 2

    def test_clique_block_is_not_a_cycle(self):
        assert odd_cycle_block_count(make("complete", n=4).graph) == 0


class TestCheckClaim:
    def test_complete_matches(self):
        v = check_claim(claim_by_id("C1"), {"n": 5})
        assert (v.predicted, v.exact, v.verdict) == (6, 6, "MATCH")
        assert v.exact == v.mono_count

    def test_cone_matches(self):
        v = check_claim(claim_by_id("C16"), {"m": 4, "n": 2})
        assert (v.predicted, v.exact, v.verdict) == (4, 4, "MATCH")

    def test_wheel_odd_rim_mismatch(self):
        v = check_claim(claim_by_id("C15"), {"m": 5})
        assert (v.predicted, v.exact, v.verdict) == (2, 4, "MISMATCH")

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_sun_statement_value_matches(self, n):
        v = check_claim(claim_by_id("C4"), {"n": n})
        assert v.verdict == "MATCH"
        assert v.predicted == (n * n - 3 * n + 6) // 2

    @pytest.mark.parametrize("r,s", [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 3)])
    def test_complete_split_proof_value_matches(self, r, s):
        v = check_claim(claim_by_id("C6"), {"r": r, "s": s})
        assert v.verdict == "MATCH"
        assert v.predicted == r * (r - 1) // 2

    def test_shadow_of_triangle_disagrees(self):
        v = check_claim(claim_by_id("C12"), {"base": FamilySpec("complete", {"n": 3})})
        assert (v.predicted, v.exact, v.verdict) == (2, 3, "MISMATCH")

    def test_shadow_of_bipartite_matches_at_zero(self):
        for base in (
            FamilySpec("path", {"n": 6}),
            FamilySpec("cycle", {"n": 8}),
            FamilySpec("complete_bipartite", {"parts": [2, 3]}),
        ):
            v = check_claim(claim_by_id("C12"), {"base": base})
            assert (v.predicted, v.exact, v.verdict) == (0, 0, "MATCH")

    def test_shadow_of_trees_matches_at_zero(self):
        import random

        from helpers import random_tree
        from sparing.claims import predicted_value
        from sparing.graphs import shadow
        from sparing.solver import sparing_exact as solve

        rng = random.Random(5)
        for _ in range(8):
            tree = random_tree(rng.randint(2, 8), rng)
            assert solve(shadow(tree)).value == 0 == 2 * solve(tree).value

    def test_subdivision_modes(self):
        base = FamilySpec("complete", {"n": 3})
        fresh = check_claim(claim_by_id("C13"), {"base": base, "mode": "fresh"})
        induced = check_claim(claim_by_id("C13"), {"base": base, "mode": "induced"})
        assert fresh.predicted == induced.predicted == 2
        # subdividing the lone mono edge of a triangle leaves an even cycle
        assert (fresh.exact, fresh.verdict) == (0, "MISMATCH")
        assert (induced.exact, induced.verdict) == (2, "MATCH")

    def test_cactus(self):
        v = check_claim(claim_by_id("C14"), {"cycles": [3, 4, 5]})
        assert (v.predicted, v.verdict) == (2, "MATCH")

    def test_verdict_definition(self):
        v = check_claim(claim_by_id("C11"), {"r": 3})
        assert (v.verdict == "MATCH") == (v.predicted == v.exact)

    def test_exact_value_comes_from_solver(self):
        lg = generate(FamilySpec("windmill", {"n": 3, "r": 4}))
        v = check_claim(claim_by_id("C10"), {"n": 3, "r": 4}, lg=lg)
        assert v.exact == sparing_exact(lg.graph).value

    def test_domain_violation_raises(self):
        with pytest.raises(DomainError):
            check_claim(claim_by_id("C16"), {"m": 4, "n": 1})


class TestClaimSoundnessSweep:
    """Claims with sound proofs match the solver across their desk-scale domains."""

    def test_complete_graphs(self):
        for n in range(3, 9):
            assert check_claim(claim_by_id("C1"), {"n": n}).verdict == "MATCH"

    def test_odd_cycles(self):
        for n in range(3, 14, 2):
            assert check_claim(claim_by_id("C2"), {"n": n}).verdict == "MATCH"

    def test_bipartite(self):
        for a in range(1, 5):
            for b in range(a, 5):
                assert check_claim(claim_by_id("C3"), {"a": a, "b": b}).verdict == "MATCH"

    def test_tripartite(self):
        for a in range(1, 4):
            for b in range(a, 4):
                for c in range(b, 4):
                    v = check_claim(claim_by_id("C8"), {"a": a, "b": b, "c": c})
                    assert v.verdict == "MATCH"

    def test_windmills_and_friendship(self):
        for n in (3, 4):
            for r in (2, 3):
                assert check_claim(claim_by_id("C10"), {"n": n, "r": r}).verdict == "MATCH"
        for r in (2, 3, 4):
            assert check_claim(claim_by_id("C11"), {"r": r}).verdict == "MATCH"

    def test_cones(self):
        for m in (3, 4, 5):
            for n in (2, 3):
                assert check_claim(claim_by_id("C16"), {"m": m, "n": n}).verdict == "MATCH"

    def test_block_chains(self):
        for sizes in ([2], [3], [4, 2], [3, 3, 3], [4, 4], [2, 3, 4]):
            assert check_claim(claim_by_id("C9"), {"cliques": sizes}).verdict == "MATCH"

    def test_cacti(self):
        for lengths in ([3], [4], [5, 5], [3, 4], [3, 3, 5], [4, 4, 4]):
            assert check_claim(claim_by_id("C14"), {"cycles": lengths}).verdict == "MATCH"


def test_isolated_vertices_do_not_confuse_block_counting():
    g = graph_from_edges(3, [])
    assert odd_cycle_block_count(g) == 0
