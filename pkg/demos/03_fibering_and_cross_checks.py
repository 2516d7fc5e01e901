"""Tour: fibering, kernel invariants, and the three-way cross check.

A rational character fibers exactly when its living subcomplex is connected
and dominating. For primitive integral characters of a connected chordal
complex, three independently computed quantities coincide: the polytope
thickness, minus the kernel's L2-Euler characteristic, and the complexity
of the constructed dual splitting. The harness checks this on deterministic
random input.
"""

from raagnorm import (
    Character,
    FlagComplex,
    cross_check,
    is_fibered,
    l2_betti_kernel,
    l2_euler_kernel,
    random_chordal,
    run_suite,
    two_triangles,
)
from raagnorm.verify import SplitMix64, random_primitive_character


def show(title):
    print(f"\n=== {title} ===")


show("Fibering locus of the glued triangles")
tt = two_triangles()
for values in (
    {"v1": 1, "v2": 0, "w1": 0, "w2": 0},
    {"v1": 0, "v2": 0, "w1": 1, "w2": 0},
    {"v1": 0, "v2": 0, "w1": 1, "w2": 1},
    {"v1": 2, "v2": -1, "w1": 3, "w2": 5},
):
    report = is_fibered(tt, Character(values))
    print(f"{tuple(values.values())}: fibered={report.fibered}"
          f" (connected={report.connected}, dominating={report.dominating})")

show("Kernel invariants on a star")
star = FlagComplex(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])
phi = Character({"c": 1, "x": 0, "y": 0, "z": 0})
print("kernel L2-Betti numbers:", l2_betti_kernel(star, phi))
print("kernel L2-Euler characteristic:", l2_euler_kernel(star, phi))

show("Three quantities, three code paths")
rng = SplitMix64(2024)
for seed in (1, 2, 3):
    L = random_chordal(8, seed)
    phi = random_primitive_character(L, rng)
    report = cross_check(L, phi)
    print(f"n=8 seed={seed}: values={report.values()} equal={report.equal}")

show("A free group is the boundary of the theory")
free2 = FlagComplex(["a", "b"])
report = cross_check(free2, Character({"a": 1, "b": 1}))
print("two generators, no relation: applicable =", report.applicable)

show("The full suite")
outcome = run_suite({"samples": 40, "max_n": 10, "seed": 7})
for check in outcome["checks"]:
    print(f"{check['name']}: {check['passed']} passed, {check['failed']} failed")
print("overall ok:", outcome["ok"])
