from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from raagnorm import (
    AmbientMismatchError,
    Character,
    DisconnectedError,
    FlagComplex,
    NotChordalError,
    NotOneEndedError,
    ZonotopeElement,
    combine,
    l2_polytope,
    negate,
    norm_ball,
    random_chordal,
    thickness,
    thurston_norm,
    two_triangles,
)
from raagnorm.verify import SplitMix64, random_character

AMBIENT = ("a", "b", "c")

vectors = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
elements = st.builds(
    lambda gens: ZonotopeElement(AMBIENT, gens),
    st.lists(st.tuples(vectors, st.integers(-3, 3)), max_size=5),
)
characters = st.builds(
    lambda a, b, c: Character({"a": a, "b": b, "c": c}),
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(-5, 5),
)


def seg(vec, coeff=1):
    return ZonotopeElement(AMBIENT, [(vec, coeff)])


# -- canonical form and group laws ---------------------------------------------


def test_parallel_generators_merge():
    assert seg((1, 1, 0)) + seg((2, 2, 0)) == seg((1, 1, 0), 3)


def test_sign_normalization():
    assert seg((-1, -1, 0)) == seg((1, 1, 0))
    assert seg((0, -2, 0)) == seg((0, 1, 0), 2)


def test_zero_direction_is_neutral():
    assert ZonotopeElement(AMBIENT, [((0, 0, 0), 5)]).is_neutral


def test_doubling():
    e_a = seg((1, 0, 0))
    assert (e_a + e_a).coeffs == {(1, 0, 0): 2}


def test_inverse_and_neutral():
    z = seg((1, 2, 0), 3) + seg((0, 0, 1), -2)
    assert (z + negate(z)).is_neutral
    assert combine(z, ZonotopeElement(AMBIENT)) == z


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_group_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x - x).is_neutral


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        seg((1, 0, 0)) + ZonotopeElement(("a", "b"), [((1, 0), 1)])
    with pytest.raises(AmbientMismatchError):
        ZonotopeElement(AMBIENT, [((1, 0), 1)])


def test_is_single():
    assert seg((1, 0, 0)).is_single
    assert not negate(seg((1, 0, 0))).is_single
    assert ZonotopeElement(AMBIENT).is_single


def test_zonotope_json_roundtrip():
    z = seg((1, 2, 0), 3) - seg((0, 0, 1), 2)
    doc = z.to_json_doc()
    assert ZonotopeElement.from_json_doc(doc, AMBIENT) == z


# -- thickness -------------------------------------------------------------------


def test_thickness_examples(phi111):
    assert thickness(seg((0, 1, 0)), phi111) == 1
    assert thickness(ZonotopeElement(AMBIENT), phi111) == 0
    assert thickness(seg((1, -2, 3)), Character({"a": 1, "b": 1, "c": 1})) == 2


@settings(max_examples=60, deadline=None)
@given(elements, elements, characters)
def test_thickness_is_a_homomorphism(z1, z2, phi):
    assert thickness(z1 + z2, phi) == thickness(z1, phi) + thickness(z2, phi)


@settings(max_examples=40, deadline=None)
@given(elements, characters, st.fractions(min_value=-4, max_value=4))
def test_thickness_scales_with_character(z, phi, q):
    assert thickness(z, phi.scale(q)) == abs(q) * thickness(z, phi)


def test_thickness_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        thickness(seg((1, 0, 0)), Character({"a": 1, "b": 1}))


# -- the group polytope ------------------------------------------------------------


def test_polytope_two_triangles_trivial(tt):
    assert l2_polytope(tt).is_neutral


def test_polytope_cliques_trivial():
    for n in range(2, 7):
        names = [f"k{i}" for i in range(n)]
        K = FlagComplex(names, [(u, v) for i, u in enumerate(names) for v in names[i + 1 :]])
        assert l2_polytope(K).is_neutral


def test_polytope_p3(p3):
    z = l2_polytope(p3)
    assert z.coeffs == {(0, 1, 0): 1}
    assert z.is_single


def test_polytope_always_single():
    for seed in range(15):
        L = random_chordal(2 + seed % 8, seed + 500)
        assert l2_polytope(L).is_single


def test_polytope_domain_gates(c4):
    with pytest.raises(NotChordalError) as err:
        l2_polytope(c4)
    assert err.value.info["cycle"] == ["a", "b", "c", "d"]
    with pytest.raises(DisconnectedError):
        l2_polytope(FlagComplex(["a", "b"]))
    with pytest.raises(NotOneEndedError):
        l2_polytope(FlagComplex(["a"]))


# -- the norm ---------------------------------------------------------------------


def test_norm_weighted_l1(p3, star3, tt):
    assert thurston_norm(p3, Character({"a": 3, "b": 5, "c": 7})) == 5
    assert thurston_norm(star3, Character({"c": 1, "x": 0, "y": 0, "z": 0})) == 2
    for values in ({"v1": 1, "v2": 2, "w1": 3, "w2": 4}, {"v1": -9, "v2": 0, "w1": 0, "w2": 1}):
        assert thurston_norm(tt, Character(values)) == 0


def test_norm_zero_character_allowed(p3):
    assert thurston_norm(p3, Character({"a": 0, "b": 0, "c": 0})) == 0


def test_norm_matches_polytope_thickness():
    rng = SplitMix64(3)
    for seed in range(20):
        L = random_chordal(2 + seed % 9, seed + 900)
        phi = random_character(L, rng)
        assert thurston_norm(L, phi) == thickness(l2_polytope(L), phi)


def test_norm_float_mode(p3):
    value = thurston_norm(p3, {"a": 0.25, "b": -1.5, "c": 3.0})
    assert isinstance(value, float)
    assert abs(value - 1.5) <= 1e-12
    with pytest.raises(AmbientMismatchError):
        thurston_norm(p3, {"a": 1.0})


def test_norm_seminorm_axioms_sampled():
    rng = SplitMix64(17)
    for seed in range(10):
        L = random_chordal(2 + seed % 7, seed + 1300)
        for _ in range(30):
            phi = random_character(L, rng)
            psi = random_character(L, rng)
            assert thurston_norm(L, phi.add(psi)) <= thurston_norm(L, phi) + thurston_norm(L, psi)
            q = Fraction(rng.below(13) - 6, 1 + rng.below(3))
            assert thurston_norm(L, phi.scale(q)) == abs(q) * thurston_norm(L, phi)


# -- the unit ball ------------------------------------------------------------------


def test_ball_star(star3):
    ball = norm_ball(star3)
    assert ball.weights == {"c": 2, "x": 0, "y": 0, "z": 0}
    assert ball.bounded_vertices == (
        (Fraction(1, 2), 0, 0, 0),
        (Fraction(-1, 2), 0, 0, 0),
    )
    assert ball.lineality_basis == ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert not ball.is_whole_space


def test_ball_p3_slab(p3):
    ball = norm_ball(p3)
    assert ball.bounded_vertices == ((0, Fraction(1), 0), (0, Fraction(-1), 0))
    assert ball.lineality_basis == ((1, 0, 0), (0, 0, 1))
    assert ball.contains(Character({"a": 100, "b": 1, "c": -50}))
    assert not ball.contains(Character({"a": 0, "b": "3/2", "c": 0}))


def test_ball_whole_space(tt):
    ball = norm_ball(tt)
    assert ball.is_whole_space
    assert len(ball.lineality_basis) == 4


def test_ball_membership_matches_norm():
    rng = SplitMix64(23)
    for seed in range(15):
        L = random_chordal(2 + seed % 8, seed + 1700)
        ball = norm_ball(L)
        for _ in range(10):
            phi = random_character(L, rng).scale(Fraction(1, 1 + rng.below(9)))
            assert ball.contains(phi) == (thurston_norm(L, phi) <= 1)


def test_ball_json(star3):
    doc = norm_ball(star3).to_json_doc()
    assert doc["weights"] == {"c": 2, "x": 0, "y": 0, "z": 0}
    assert doc["vertices"] == [["1/2", "0", "0", "0"], ["-1/2", "0", "0", "0"]]
    assert doc["lineality"] == [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
