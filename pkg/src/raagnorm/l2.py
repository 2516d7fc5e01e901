"""Closed-form L2-Betti numbers and L2-Euler characteristics.

For the group of a flag complex L and an epimorphism to the integers given
by a primitive integral character:

* ``b_i`` of the group itself is the reduced Betti number of L one
  dimension down;
* ``b_i`` of the character's kernel is the |value|-weighted sum of the
  links' reduced Betti numbers one dimension down;
* the kernel's L2-Euler characteristic is the |value|-weighted sum of the
  links' group Euler characteristics.

Fibering (finitely generated kernel) is decided by the living-subcomplex
criterion: connected and dominating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import Character, check_domain, require_nonzero, require_primitive
from .complexes import FlagComplex
from .homology import euler_raag, reduced_betti


def l2_betti_group(L: FlagComplex, max_i=None, cap=None) -> list:
    """b_i of the group of ``L`` for 0 <= i <= max_i (exact rationals).

    ``max_i`` defaults to the top simplex dimension plus one; all higher
    entries vanish.
    """
    rb = reduced_betti(L, cap)
    if max_i is None:
        max_i = rb.top_dim + 1
    return [Fraction(rb.rank(i - 1)) for i in range(max_i + 1)]


def l2_betti_kernel(L: FlagComplex, phi: Character, max_i=None, cap=None) -> list:
    """b_i of the kernel of the epimorphism given by a primitive ``phi``."""
    check_domain(phi, L)
    require_primitive(phi)
    links = {v: reduced_betti(L.link(v), cap) for v in L.vertices}
    if max_i is None:
        max_i = max((rb.top_dim for rb in links.values()), default=-1) + 2
    out = []
    for i in range(max_i + 1):
        out.append(
            sum(
                (abs(phi.value(v)) * links[v].rank(i - 1) for v in L.vertices),
                start=Fraction(0),
            )
        )
    return out


def l2_euler_kernel(L: FlagComplex, phi: Character, cap=None) -> Fraction:
    """L2-Euler characteristic of the kernel: sum of |phi(v)| * chi of the
    group of the link of v."""
    check_domain(phi, L)
    require_primitive(phi)
    return sum(
        (abs(phi.value(v)) * euler_raag(L.link(v), cap) for v in L.vertices),
        start=Fraction(0),
    )


@dataclass(frozen=True)
class FiberingReport:
    """Outcome of the living-subcomplex test.

    fibered <=> connected and dominating; ``living`` is the induced
    subcomplex on the vertices where the character is nonzero.
    """

    fibered: bool
    living: FlagComplex
    connected: bool
    dominating: bool

    def to_json_doc(self):
        return {
            "fibered": self.fibered,
            "living": self.living.to_json_doc(),
            "connected": self.connected,
            "dominating": self.dominating,
        }


def living_subcomplex(L: FlagComplex, phi: Character) -> FlagComplex:
    check_domain(phi, L)
    return L.induced([v for v in L.vertices if phi.value(v) != 0])


def is_fibered(L: FlagComplex, phi: Character) -> FiberingReport:
    """Finitely generated kernel test for a nonzero rational character."""
    check_domain(phi, L)
    require_nonzero(phi)
    living = living_subcomplex(L, phi)
    alive = set(living.vertices)
    connected = living.is_connected()
    dominating = all(
        v in alive or any(w in alive for w in L.neighbors(v)) for v in L.vertices
    )
    return FiberingReport(connected and dominating, living, connected, dominating)
