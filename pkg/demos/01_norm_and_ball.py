"""Tour: from a simplicial graph to its semi-norm and unit ball.

The group of a connected chordal graph on at least two vertices carries a
Thurston-type semi-norm on first cohomology. It is a weighted l1 norm whose
weights are the cut ranks of the vertices, and it arises as the thickness
function of a zonotope built from cut-rank multiples of coordinate segments.
"""

from fractions import Fraction

from raagnorm import (
    Character,
    FlagComplex,
    cut_rank_weights,
    l2_polytope,
    norm_ball,
    thickness,
    thurston_norm,
    two_triangles,
)


def show(title):
    print(f"\n=== {title} ===")


show("A path on three vertices")
p3 = FlagComplex(["a", "b", "c"], [("a", "b"), ("b", "c")])
print("cut ranks:", cut_rank_weights(p3))
print("polytope:", l2_polytope(p3))
phi = Character({"a": 3, "b": 5, "c": 7})
print("norm of (3,5,7):", thurston_norm(p3, phi))
print("same via thickness:", thickness(l2_polytope(p3), phi))

show("A star: the center is worth more")
star = FlagComplex(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])
print("cut ranks:", cut_rank_weights(star))
ball = norm_ball(star)
print("ball weights:", ball.weights)
print("bounded vertices:", [[str(x) for x in p] for p in ball.bounded_vertices])
print("lineality directions:", ball.lineality_basis)
inside = Character({"c": Fraction(1, 4), "x": 10, "y": -3, "z": 0})
print("||(1/4, *, *, *)|| =", thurston_norm(star, inside), "-> in ball:", ball.contains(inside))

show("Two triangles glued along an edge: the norm degenerates")
tt = two_triangles()
print("cut ranks:", cut_rank_weights(tt))
print("polytope is neutral:", l2_polytope(tt).is_neutral)
print("norm of anything:", thurston_norm(tt, Character({"v1": 9, "v2": -4, "w1": 2, "w2": 1})))
print("ball is the whole space:", norm_ball(tt).is_whole_space)

show("Semi-norm axioms, exactly")
psi = Character({"a": -2, "b": 1, "c": 0})
lhs = thurston_norm(p3, phi.add(psi))
rhs = thurston_norm(p3, phi) + thurston_norm(p3, psi)
print(f"subadditivity: {lhs} <= {rhs}")
q = Fraction(-7, 3)
print(
    f"homogeneity with {q}:",
    thurston_norm(p3, phi.scale(q)) == abs(q) * thurston_norm(p3, phi),
)
