import json
from fractions import Fraction

import pytest

from raagnorm import (
    Amalgam,
    BlockKernel,
    Character,
    FlagComplex,
    GogEdge,
    GraphOfGroups,
    NotChordalError,
    Parabolic,
    SplittingError,
    Trivial,
    ZeroCharacterError,
    b1_of,
    clique_tree_splitting,
    cyclic_cover_truncation,
    dual_splitting,
    euler_check,
    euler_of,
    euler_raag,
    l2_euler_kernel,
    living_blocks,
    random_chordal,
    splitting_complexity,
    thurston_norm,
    two_triangles,
)
from raagnorm.verify import SplitMix64, random_character, random_primitive_character


# -- descriptors ---------------------------------------------------------------


def test_descriptor_euler(p3, tt):
    assert euler_of(Parabolic(("a", "b")), p3) == 0
    assert euler_of(Parabolic(("a", "c")), p3) == -1  # free of rank two
    assert euler_of(Parabolic(()), p3) == 1
    assert euler_of(Trivial(), p3) == 1
    assert euler_of(BlockKernel(("a",), 1, Fraction(-5)), p3) == -5
    amalgam = Amalgam((Parabolic(("a", "b")), Parabolic(("b", "c"))), (Parabolic(("b",)),))
    assert euler_of(amalgam, p3) == 0


def test_descriptor_b1(p3):
    assert b1_of(Parabolic(("a", "c")), p3) == 1  # two components, one reduced
    assert b1_of(Parabolic(("a", "b")), p3) == 0
    assert b1_of(Trivial(), p3) == 0
    assert b1_of(BlockKernel(("a",), 1, Fraction(-3)), p3) == 3
    assert b1_of(BlockKernel(("a",), 1, Fraction(1)), p3) == 0  # trivial kernel


# -- clique-tree splittings ---------------------------------------------------------


def test_clique_tree_splitting_p3(p3):
    gog = clique_tree_splitting(p3)
    assert gog.vertex_groups == (Parabolic(("a", "b")), Parabolic(("b", "c")))
    assert len(gog.edges) == 1
    assert gog.edges[0].group == Parabolic(("b",))
    assert gog.tree_edges == {0}
    assert not gog.stable_letters


def test_clique_tree_splitting_simplex(k3):
    gog = clique_tree_splitting(k3)
    assert gog.vertex_groups == (Parabolic(("a", "b", "c")),)
    assert gog.edges == ()


def test_clique_tree_splitting_two_triangles(tt):
    gog = clique_tree_splitting(tt)
    assert gog.vertex_groups == (
        Parabolic(("v1", "v2", "w1")),
        Parabolic(("v1", "v2", "w2")),
    )
    assert gog.edges[0].group == Parabolic(("v1", "v2"))


def test_clique_tree_euler_bookkeeping():
    for seed in range(15):
        L = random_chordal(1 + seed % 9, seed + 40)
        assert euler_check(clique_tree_splitting(L)) == euler_raag(L) == 0
        # edge groups are faces of both endpoint cliques
        gog = clique_tree_splitting(L)
        for e in gog.edges:
            sep = set(e.group.vertices)
            assert sep <= set(gog.vertex_groups[e.source].vertices)
            assert sep <= set(gog.vertex_groups[e.target].vertices)


# -- living blocks ----------------------------------------------------------------


def test_living_blocks(p3, tt, phi111, phi101):
    assert living_blocks(p3, phi101) == [("a",), ("c",)]
    assert living_blocks(p3, phi111) == [("a", "b", "c")]
    phi = Character({"v1": 1, "v2": 0, "w1": 0, "w2": 0})
    assert living_blocks(tt, phi) == [("v1",)]
    with pytest.raises(ZeroCharacterError):
        living_blocks(p3, Character({"a": 0, "b": 0, "c": 0}))


# -- dual splittings ---------------------------------------------------------------


def test_dual_splitting_p3_fibered(p3, phi111):
    gog, report = dual_splitting(p3, phi111)
    assert gog.single_vertex
    assert len(gog.edges) == 1
    edge = gog.edges[0]
    assert edge.source == edge.target == 0
    assert edge.group == BlockKernel(("a", "b", "c"), 1, Fraction(-1))
    assert gog.vertex_groups[0] == edge.group
    assert gog.stable_letters == {0: Fraction(1)}
    assert report.complexity == 1
    assert splitting_complexity(gog, phi111) == 1
    assert report.tree_certificate["is_tree"]


def test_dual_splitting_p3_dead_middle(p3, phi101):
    gog, report = dual_splitting(p3, phi101)
    assert len(gog.edges) == 2
    for e in gog.edges:
        assert e.group.k == 1 and e.group.chi == 0
    assert report.complexity == 0
    assert splitting_complexity(gog, phi101) == 0
    # collapsed vertex amalgamates both kernels and the dead parabolic
    vertex = gog.vertex_groups[0]
    assert isinstance(vertex, Amalgam)
    assert Parabolic(("b",)) in vertex.parts
    assert vertex.edge_groups == (Parabolic(("b",)), Parabolic(("b",)))


def test_dual_splitting_star(star3):
    phi = Character({"c": 1, "x": 0, "y": 0, "z": 0})
    gog, report = dual_splitting(star3, phi)
    assert len(gog.edges) == 1
    assert gog.edges[0].group == BlockKernel(("c",), 1, Fraction(-2))
    assert report.complexity == 2
    assert len(report.blocks) == 1
    row = report.blocks[0]
    assert (row.block, row.k, row.chi, row.contribution) == (("c",), 1, Fraction(-2), Fraction(2))


def test_dual_splitting_scaled_character(p3):
    phi = Character({"a": 2, "b": 2, "c": 2})
    gog, report = dual_splitting(p3, phi)
    assert gog.edges[0].group.k == 2
    assert gog.edges[0].group.chi == -1
    assert report.complexity == 2
    assert splitting_complexity(gog, phi) == 2


def test_dual_splitting_gates(c4, p3):
    with pytest.raises(NotChordalError):
        dual_splitting(c4, Character({v: 1 for v in c4.vertices}))
    with pytest.raises(ZeroCharacterError):
        dual_splitting(p3, Character({"a": 0, "b": 0, "c": 0}))
    from raagnorm import NotIntegralError

    with pytest.raises(NotIntegralError):
        dual_splitting(p3, Character({"a": "1/2", "b": 0, "c": 0}))


def test_dual_splitting_disconnected_free_product():
    L = FlagComplex(["a", "b"])
    phi = Character({"a": 1, "b": 1})
    gog, report = dual_splitting(L, phi)
    assert gog.single_vertex and len(gog.edges) == 2
    vertex = gog.vertex_groups[0]
    assert isinstance(vertex, Amalgam)
    assert Trivial() in vertex.parts
    assert vertex.edge_groups == (Trivial(), Trivial())
    # both blocks are singleton components with trivial kernels
    for e in gog.edges:
        assert e.group.chi == 1
    assert report.complexity == -2
    assert euler_check(gog) == euler_raag(L) == -1


def test_dual_splitting_component_with_dead_character():
    L = FlagComplex(
        ["a", "b", "c", "x", "y"],
        [("a", "b"), ("b", "c"), ("x", "y")],
    )
    phi = Character({"a": 1, "b": 1, "c": 1, "x": 0, "y": 0})
    gog, report = dual_splitting(L, phi)
    assert gog.single_vertex and len(gog.edges) == 1
    vertex = gog.vertex_groups[0]
    assert Parabolic(("x", "y")) in vertex.parts
    assert report.complexity == 1
    assert euler_check(gog) == euler_raag(L)


def test_dual_splitting_fibered_single_block_covers_everything():
    rng = SplitMix64(41)
    from raagnorm import is_fibered

    hits = 0
    for seed in range(60):
        L = random_chordal(2 + seed % 8, seed + 4000)
        phi = random_primitive_character(L, rng)
        if not is_fibered(L, phi).fibered:
            continue
        hits += 1
        gog, report = dual_splitting(L, phi)
        assert len(report.blocks) == 1 and len(gog.edges) == 1  # single HNN loop
        block = report.blocks[0]
        hood = L.one_neighborhood(block.block)
        assert hood == L.vertices  # dominating block reaches everything
        assert block.chi == l2_euler_kernel(L, phi)
        assert report.complexity == -block.chi
    assert hits >= 5


def test_block_contributions_match_ambient_links():
    rng = SplitMix64(67)
    for seed in range(20):
        L = random_chordal(2 + seed % 9, seed + 12000)
        phi = random_character(L, rng)
        _, report = dual_splitting(L, phi)
        for row in report.blocks:
            ambient_sum = sum(
                abs(phi.value(v)) * euler_raag(L.link(v)) for v in row.block
            )
            assert row.contribution == -ambient_sum
            assert row.contribution == -row.k * row.chi


def test_edge_group_euler_nonpositive_except_trivial_kernels():
    rng = SplitMix64(43)
    for seed in range(40):
        L = random_chordal(2 + seed % 9, seed + 6000)
        phi = random_character(L, rng)
        gog, _ = dual_splitting(L, phi)
        for e in gog.edges:
            assert isinstance(e.group, BlockKernel)
            assert e.group.chi <= 0 or (
                e.group.chi == 1 and len(L.one_neighborhood(e.group.block)) == 1
            )


# -- splitting complexity ------------------------------------------------------------


def test_complexity_requires_single_vertex(p3):
    with pytest.raises(SplittingError):
        splitting_complexity(clique_tree_splitting(p3), Character({"a": 1, "b": 1, "c": 1}))


def test_complexity_edgeless_is_zero(k3):
    gog = GraphOfGroups(k3, [Parabolic(("a", "b", "c"))], [])
    assert splitting_complexity(gog, Character({"a": 1, "b": 0, "c": 0})) == 0


def test_complexity_proportional_characters(p3, phi111):
    gog, _ = dual_splitting(p3, phi111)
    assert splitting_complexity(gog, phi111.scale(-3)) == 3
    assert splitting_complexity(gog, phi111.scale(Fraction(1, 2))) == Fraction(1, 2)
    with pytest.raises(SplittingError):
        splitting_complexity(gog, Character({"a": 1, "b": 2, "c": 3}))


def test_multiplicativity_by_rebuild():
    rng = SplitMix64(47)
    for seed in range(20):
        L = random_chordal(2 + seed % 8, seed + 7000)
        phi = random_character(L, rng)
        base_gog, base_report = dual_splitting(L, phi)
        base = splitting_complexity(base_gog, phi)
        assert base == base_report.complexity
        for k in (-3, -2, -1, 2, 3):
            gog_k, report_k = dual_splitting(L, phi.scale(k))
            assert report_k.complexity == abs(k) * base
            assert splitting_complexity(gog_k, phi.scale(k)) == abs(k) * base


# -- Euler bookkeeping ----------------------------------------------------------------


def test_euler_check_examples(p3, phi111):
    assert euler_check(clique_tree_splitting(p3)) == 0
    gog, _ = dual_splitting(p3, phi111)
    assert euler_check(gog) == 0
    assert euler_of(gog.vertex_groups[0], p3) == -1
    assert euler_of(gog.edges[0].group, p3) == -1


def test_euler_check_free_product_wrapper():
    L = FlagComplex(["a", "b"])
    wrapper = GraphOfGroups(
        L,
        [Parabolic(("a",)), Parabolic(("b",)), Trivial()],
        [GogEdge(0, 2, Trivial(), "trivial"), GogEdge(1, 2, Trivial(), "trivial")],
        tree_edges=(0, 1),
    )
    assert euler_check(wrapper) == -1  # 0 + 0 + 1 - 1 - 1


def test_euler_check_every_produced_splitting():
    rng = SplitMix64(53)
    for seed in range(25):
        L = random_chordal(1 + seed % 10, seed + 8000)
        assert euler_check(clique_tree_splitting(L)) == euler_raag(L)
        phi = random_character(L, rng)
        gog, _ = dual_splitting(L, phi)
        assert euler_check(gog) == euler_raag(L)


# -- graph-of-groups structure ---------------------------------------------------------


def test_gog_validation(p3):
    with pytest.raises(SplittingError):
        GraphOfGroups(
            p3,
            [Parabolic(("a",)), Parabolic(("b",))],
            [GogEdge(0, 1, Trivial(), "trivial")],
            tree_edges=(),
        )  # tree does not span
    with pytest.raises(SplittingError):
        GraphOfGroups(
            p3,
            [Parabolic(("a",))],
            [GogEdge(0, 0, Trivial(), "trivial")],
            tree_edges=(0,),
        )  # loop in tree
    with pytest.raises(SplittingError):
        GraphOfGroups(
            p3,
            [Parabolic(("a",)), Parabolic(("b",))],
            [
                GogEdge(0, 1, Trivial(), "trivial"),
                GogEdge(0, 1, Trivial(), "trivial"),
            ],
            tree_edges=(0,),
            stable_letters={0: Fraction(1)},
        )  # stable letter on a tree edge


def test_gog_json_roundtrip(p3, tt, phi111):
    for gog in (
        clique_tree_splitting(p3),
        clique_tree_splitting(tt),
        dual_splitting(p3, phi111)[0],
        dual_splitting(FlagComplex(["a", "b"]), Character({"a": 1, "b": 2}))[0],
    ):
        doc = gog.to_json_doc()
        json.dumps(doc)  # must be serializable
        assert GraphOfGroups.from_json_doc(doc) == gog


# -- cyclic cover truncations ------------------------------------------------------------


def test_truncation_single_loop(p3, phi111):
    gog, _ = dual_splitting(p3, phi111)
    t = cyclic_cover_truncation(gog, phi111, 2)
    assert t.vertex_count == 5
    assert t.lift_counts == (4,)
    assert t.connected
    assert t.vertex_rank_sum == 5 and t.edge_rank_sum == 4
    assert t.rank_difference == 1


def test_truncation_difference_stabilizes(p3, phi111):
    gog, _ = dual_splitting(p3, phi111)
    for k in (1, 5, 10):
        t = cyclic_cover_truncation(gog, phi111, k)
        assert t.rank_difference == 1  # = sum over loops of |phi(t_e)| * b1


def test_truncation_letter_three(p3):
    phi = Character({"a": 3, "b": 0, "c": 1})
    gog, _ = dual_splitting(p3, phi)
    letters = sorted(abs(int(v)) for v in gog.stable_letters.values())
    assert letters == [1, 3]
    t1 = cyclic_cover_truncation(gog, phi, 1)
    by_letter = {
        abs(int(gog.stable_letters[i])): t1.lift_counts[i] for i in range(len(gog.edges))
    }
    assert by_letter[3] == 0  # max(0, 2*1 + 1 - 3)
    assert by_letter[1] == 2
    t3 = cyclic_cover_truncation(gog, phi, 3)
    assert t3.connected


def test_truncation_counts_formula_and_connectivity():
    rng = SplitMix64(59)
    checked = 0
    while checked < 12:
        L = random_chordal(2 + rng.below(8), rng.next_u64())
        phi = random_primitive_character(L, rng)
        gog, _ = dual_splitting(L, phi)
        if not gog.edges:
            continue
        checked += 1
        letters = [abs(int(v)) for v in gog.stable_letters.values()]
        for k in range(0, 12):
            t = cyclic_cover_truncation(gog, phi, k)
            assert t.vertex_count == 2 * k + 1
            for i, m in enumerate(letters):
                assert t.lift_counts[i] == max(0, 2 * k + 1 - m)
            if k >= max(letters):
                assert t.connected


def test_truncation_preconditions(p3, phi111, k3):
    gog, _ = dual_splitting(p3, phi111)
    with pytest.raises(SplittingError):
        cyclic_cover_truncation(gog, phi111, -1)
    with pytest.raises(SplittingError):
        cyclic_cover_truncation(gog, phi111.scale(2), 3)  # letters gcd 2
    with pytest.raises(SplittingError):
        cyclic_cover_truncation(gog, phi111.scale(Fraction(1, 2)), 3)  # non-integer
    edgeless = GraphOfGroups(k3, [Parabolic(("a", "b", "c"))], [])
    with pytest.raises(SplittingError):
        cyclic_cover_truncation(edgeless, Character({"a": 1, "b": 0, "c": 0}), 2)


def test_main_equality_through_splittings():
    rng = SplitMix64(61)
    for seed in range(30):
        L = random_chordal(2 + seed % 10, seed + 9000)
        phi = random_primitive_character(L, rng)
        gog, report = dual_splitting(L, phi)
        assert report.complexity == -l2_euler_kernel(L, phi) == thurston_norm(L, phi)
