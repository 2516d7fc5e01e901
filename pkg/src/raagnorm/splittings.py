"""Graph-of-groups splittings: clique trees, duals to a character, and the
complexity/Euler/cover bookkeeping they support.

Group elements are never represented as words. Vertex and edge groups are
symbolic descriptors carrying exactly what the formulas consume: a vertex
set (parabolic subgroup), or a living block with the index of its character
image and the kernel's Euler characteristic. Stable letters exist only
through their character values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import Character, check_domain, require_integral, require_nonzero
from .complexes import FlagComplex, clique_tree, require_chordal
from .errors import ParseError, SplittingError
from .homology import euler_raag
from .rationals import format_rational, parse_rational

# -- group descriptors ---------------------------------------------------------


@dataclass(frozen=True)
class Parabolic:
    """Subgroup generated by a set of standard generators."""

    vertices: tuple


@dataclass(frozen=True)
class BlockKernel:
    """Kernel of the character restricted to a living block's neighborhood
    group; ``k`` is the index of the image, ``chi`` the kernel's Euler
    characteristic."""

    block: tuple
    k: int
    chi: Fraction


@dataclass(frozen=True)
class Trivial:
    """The trivial group (free-product hub and hub edges)."""


@dataclass(frozen=True)
class Amalgam:
    """Fundamental group of a tree of groups, kept as a formal combination;
    its Euler characteristic is the alternating sum over parts and tree
    edges. Used for the vertex left after collapsing non-loop edges."""

    parts: tuple
    edge_groups: tuple


def euler_of(descriptor, L: FlagComplex, cap=None) -> Fraction:
    """Euler characteristic of the described group."""
    if isinstance(descriptor, Parabolic):
        return Fraction(euler_raag(L.induced(descriptor.vertices), cap))
    if isinstance(descriptor, BlockKernel):
        return descriptor.chi
    if isinstance(descriptor, Trivial):
        return Fraction(1)
    if isinstance(descriptor, Amalgam):
        total = sum((euler_of(p, L, cap) for p in descriptor.parts), start=Fraction(0))
        total -= sum(
            (euler_of(e, L, cap) for e in descriptor.edge_groups), start=Fraction(0)
        )
        return total
    raise SplittingError(f"unknown descriptor {descriptor!r}")


def b1_of(descriptor, L: FlagComplex, cap=None) -> Fraction:
    """First L2-Betti number of the described group.

    Every descriptor here names a finitely generated subgroup of a chordal
    complex's group, whose L2-homology is concentrated in degree one unless
    the group is trivial (Euler characteristic one); parabolic subgroups
    contribute the reduced count of their components.
    """
    if isinstance(descriptor, Parabolic):
        sub = L.induced(descriptor.vertices)
        return Fraction(max(sub.component_count() - 1, 0))
    if isinstance(descriptor, Trivial):
        return Fraction(0)
    e = euler_of(descriptor, L, cap)
    return -e if e <= 0 else Fraction(0)


def descriptor_to_json(descriptor):
    if isinstance(descriptor, Parabolic):
        return {"kind": "parabolic", "vertices": list(descriptor.vertices)}
    if isinstance(descriptor, BlockKernel):
        return {
            "kind": "block_kernel",
            "block": list(descriptor.block),
            "k": descriptor.k,
            "chi": format_rational(descriptor.chi),
        }
    if isinstance(descriptor, Trivial):
        return {"kind": "trivial"}
    if isinstance(descriptor, Amalgam):
        return {
            "kind": "amalgam",
            "parts": [descriptor_to_json(p) for p in descriptor.parts],
            "edge_groups": [descriptor_to_json(e) for e in descriptor.edge_groups],
        }
    raise SplittingError(f"unknown descriptor {descriptor!r}")


def descriptor_from_json(doc):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("descriptor must be an object with a kind")
    kind = doc["kind"]
    if kind == "parabolic":
        return Parabolic(tuple(doc["vertices"]))
    if kind == "block_kernel":
        return BlockKernel(
            tuple(doc["block"]), int(doc["k"]), parse_rational(doc["chi"], "chi")
        )
    if kind == "trivial":
        return Trivial()
    if kind == "amalgam":
        return Amalgam(
            tuple(descriptor_from_json(p) for p in doc["parts"]),
            tuple(descriptor_from_json(e) for e in doc["edge_groups"]),
        )
    raise ParseError(f"unknown descriptor kind {kind!r}")


# -- graphs of groups ------------------------------------------------------------


@dataclass(frozen=True)
class GogEdge:
    """Positive representative of an edge pair; the reverse orientation is
    implicit, so the involution is fixed-point free by construction.

    ``inclusion`` annotates how the edge group sits in the endpoint groups:
    "parabolic" (vertex-set containment), "kernel" (both inclusions onto the
    HNN base), or "trivial".
    """

    source: int
    target: int
    group: object
    inclusion: str


class GraphOfGroups:
    """Finite graph with group descriptors on vertices and edges.

    ``tree_edges`` index a spanning tree; every positive edge outside it
    carries the character value of its stable letter in ``stable_letters``.
    ``character`` records the character a dual splitting was built against
    (None for clique trees).
    """

    def __init__(
        self,
        complex: FlagComplex,
        vertex_groups,
        edges,
        tree_edges=(),
        stable_letters=None,
        character=None,
    ):
        self.complex = complex
        self.vertex_groups = tuple(vertex_groups)
        self.edges = tuple(edges)
        self.tree_edges = frozenset(tree_edges)
        self.stable_letters = dict(stable_letters or {})
        self.character = character
        self._validate()

    def _validate(self):
        nv = len(self.vertex_groups)
        for e in self.edges:
            if not (0 <= e.source < nv and 0 <= e.target < nv):
                raise SplittingError("edge endpoint out of range")
        for i in self.tree_edges:
            if not (0 <= i < len(self.edges)):
                raise SplittingError("tree edge index out of range")
            e = self.edges[i]
            if e.source == e.target:
                raise SplittingError("a loop cannot belong to the spanning tree")
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in sorted(self.tree_edges):
            e = self.edges[i]
            ra, rb = find(e.source), find(e.target)
            if ra == rb:
                raise SplittingError("tree edges contain a cycle")
            parent[ra] = rb
        if nv and len(self.tree_edges) != nv - 1:
            raise SplittingError("tree edges do not span the vertex set")
        non_tree = set(range(len(self.edges))) - self.tree_edges
        extra = set(self.stable_letters) - non_tree
        if extra:
            raise SplittingError("stable letters on tree edges")

    @property
    def single_vertex(self) -> bool:
        return len(self.vertex_groups) == 1

    def positive_edges(self):
        return self.edges

    def __eq__(self, other):
        if not isinstance(other, GraphOfGroups):
            return NotImplemented
        return (
            self.complex == other.complex
            and self.vertex_groups == other.vertex_groups
            and self.edges == other.edges
            and self.tree_edges == other.tree_edges
            and self.stable_letters == other.stable_letters
            and self.character == other.character
        )

    def to_json_doc(self):
        edges = []
        for i, e in enumerate(self.edges):
            doc = {
                "source": e.source,
                "target": e.target,
                "group": descriptor_to_json(e.group),
                "inclusion": e.inclusion,
                "tree": i in self.tree_edges,
            }
            if i in self.stable_letters:
                doc["phi_t"] = format_rational(self.stable_letters[i])
            edges.append(doc)
        out = {
            "complex": self.complex.to_json_doc(),
            "vertices": [descriptor_to_json(g) for g in self.vertex_groups],
            "edges": edges,
        }
        if self.character is not None:
            out["character"] = self.character.to_json_doc()
        return out

    @classmethod
    def from_json_doc(cls, doc):
        from .characters import character_from_json_doc
        from .complexes import complex_from_json_doc

        if not isinstance(doc, dict):
            raise ParseError("graph-of-groups document must be an object")
        try:
            L = complex_from_json_doc(doc["complex"])
            vertex_groups = [descriptor_from_json(g) for g in doc["vertices"]]
            edge_docs = doc["edges"]
        except KeyError as exc:
            raise ParseError(f"graph-of-groups document missing key {exc}") from exc
        edges = []
        tree = set()
        letters = {}
        for i, e in enumerate(edge_docs):
            try:
                edges.append(
                    GogEdge(
                        int(e["source"]),
                        int(e["target"]),
                        descriptor_from_json(e["group"]),
                        str(e["inclusion"]),
                    )
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"edges[{i}]: malformed edge record") from exc
            if e.get("tree"):
                tree.add(i)
            if "phi_t" in e:
                letters[i] = parse_rational(e["phi_t"], f"edges[{i}].phi_t")
        character = None
        if "character" in doc:
            character = character_from_json_doc(doc["character"])
        return cls(L, vertex_groups, edges, tree, letters, character)


def euler_check(gog: GraphOfGroups, cap=None) -> Fraction:
    """Alternating Euler sum: vertices minus positive edges."""
    total = sum(
        (euler_of(g, gog.complex, cap) for g in gog.vertex_groups), start=Fraction(0)
    )
    total -= sum(
        (euler_of(e.group, gog.complex, cap) for e in gog.positive_edges()),
        start=Fraction(0),
    )
    return total


# -- clique-tree splittings --------------------------------------------------------


def clique_tree_splitting(L: FlagComplex, cap=None) -> GraphOfGroups:
    """Tree of free abelian parabolics over the maximal cliques, with the
    clique-tree separators as edge groups."""
    cliques, tree_pairs = clique_tree(L, cap)
    vertex_groups = [Parabolic(c) for c in cliques]
    edges = []
    for i, j in tree_pairs:
        sep = L.sorted(set(cliques[i]) & set(cliques[j]))
        edges.append(GogEdge(i, j, Parabolic(sep), "parabolic"))
    return GraphOfGroups(L, vertex_groups, edges, tree_edges=range(len(edges)))


# -- dual splittings -----------------------------------------------------------------


@dataclass(frozen=True)
class BlockRow:
    """Per-block accounting: image index, kernel Euler characteristic, and
    the block's contribution to the complexity."""

    block: tuple
    k: int
    chi: Fraction
    contribution: Fraction

    def to_json_doc(self):
        return {
            "block": list(self.block),
            "k": self.k,
            "chi": format_rational(self.chi),
            "contribution": format_rational(self.contribution),
        }


@dataclass(frozen=True)
class SplittingReport:
    complexity: Fraction
    blocks: tuple
    tree_certificate: dict

    def to_json_doc(self):
        return {
            "complexity": format_rational(self.complexity),
            "blocks": [b.to_json_doc() for b in self.blocks],
            "tree_certificate": self.tree_certificate,
        }


def living_blocks(L: FlagComplex, phi: Character) -> list:
    """Connected components of the living subcomplex, as vertex tuples."""
    check_domain(phi, L)
    require_nonzero(phi)
    living = L.induced([v for v in L.vertices if phi.value(v) != 0])
    return [c.vertices for c in living.components()]


def _connected_dual(L, phi, cap):
    """One connected component's construction.

    Returns (vertex descriptor, loops, block rows, tree certificate) where
    loops is a list of (BlockKernel, stable letter value).
    """
    blocks = living_blocks(L, phi)
    living = {v for b in blocks for v in b}
    dead = [v for v in L.vertices if v not in living]
    complements = L.induced(dead).components()
    hoods = [L.one_neighborhood(b) for b in blocks]

    node_labels = [
        {"role": "block_neighborhood", "block": list(b), "vertices": list(h)}
        for b, h in zip(blocks, hoods)
    ]
    node_labels += [
        {"role": "complement", "vertices": list(c.vertices)} for c in complements
    ]
    bip_edges = []
    for i, hood in enumerate(hoods):
        for j, comp in enumerate(complements):
            inter = [v for v in hood if v in set(comp.vertices)]
            if not inter:
                continue
            for piece in L.induced(inter).components():
                bip_edges.append((i, len(blocks) + j, piece.vertices))
    # Treeness is a theorem for chordal input; failure means a bug here.
    n_nodes = len(blocks) + len(complements)
    parent = list(range(n_nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, _ in bip_edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            raise AssertionError("block/complement intersection graph has a cycle")
        parent[ra] = rb
    if len(bip_edges) != n_nodes - 1:
        raise AssertionError("block/complement intersection graph is disconnected")
    for i in range(len(hoods)):
        for i2 in range(i + 1, len(hoods)):
            overlap = [v for v in hoods[i] if v in set(hoods[i2])]
            if overlap and L.induced(overlap).component_count() != 1:
                raise AssertionError("block neighborhoods meet in a disconnected set")

    loops = []
    rows = []
    for b, hood in zip(blocks, hoods):
        k = 0
        for v in b:
            k = math.gcd(k, abs(phi.value(v).numerator))
        hood_complex = L.induced(hood)
        weighted = sum(
            (
                abs(phi.value(v)) * euler_raag(hood_complex.link(v), cap)
                for v in b
            ),
            start=Fraction(0),
        )
        chi = weighted / k
        group = BlockKernel(b, k, chi)
        loops.append((group, Fraction(k)))
        rows.append(BlockRow(b, k, chi, -k * chi))

    parts = tuple(g for g, _ in loops) + tuple(
        Parabolic(c.vertices) for c in complements
    )
    edge_groups = tuple(Parabolic(L.sorted(piece)) for _, _, piece in bip_edges)
    if len(parts) == 1 and not edge_groups:
        vertex_descriptor = parts[0]
    else:
        vertex_descriptor = Amalgam(parts, edge_groups)
    certificate = {
        "nodes": node_labels,
        "edges": [
            {"source": a, "target": b, "intersection": list(piece)}
            for a, b, piece in bip_edges
        ],
        "is_tree": True,
    }
    return vertex_descriptor, loops, rows, certificate


def dual_splitting(L: FlagComplex, phi: Character, cap=None):
    """Single-vertex splitting dual to ``phi`` realizing the closed-form
    complexity, together with its report.

    Connected case: living blocks become HNN loops over the kernels of the
    character restricted to their one-neighborhood groups; complement
    components and the intersection tree are collapsed into the vertex.
    Disconnected case: components are processed separately (a component on
    which the character vanishes stays a parabolic part) and joined through
    a trivial hub before the collapse.

    For a connected chordal complex on at least two vertices the returned
    complexity is exactly the splitting complexity along ``phi``; on every
    other input it is only an upper bound for the infimum.
    """
    check_domain(phi, L)
    require_integral(phi)
    require_nonzero(phi)
    require_chordal(L)

    components = L.components()
    if len(components) == 1:
        vertex_descriptor, loops, rows, certificate = _connected_dual(L, phi, cap)
    else:
        parts = []
        loops = []
        rows = []
        sub_certs = []
        for comp in components:
            phic = phi.restrict(comp.vertices)
            if phic.is_zero:
                parts.append(Parabolic(comp.vertices))
                sub_certs.append(
                    {"component": list(comp.vertices), "dead": True}
                )
            else:
                vdesc, comp_loops, comp_rows, cert = _connected_dual(comp, phic, cap)
                parts.append(vdesc)
                loops.extend(comp_loops)
                rows.extend(comp_rows)
                cert["component"] = list(comp.vertices)
                sub_certs.append(cert)
        parts.append(Trivial())
        edge_groups = tuple(Trivial() for _ in components)
        vertex_descriptor = Amalgam(tuple(parts), edge_groups)
        certificate = {"components": sub_certs, "is_tree": True}

    edges = [GogEdge(0, 0, group, "kernel") for group, _ in loops]
    letters = {i: value for i, (_, value) in enumerate(loops)}
    gog = GraphOfGroups(
        L, [vertex_descriptor], edges, tree_edges=(), stable_letters=letters,
        character=phi,
    )
    complexity = sum((r.contribution for r in rows), start=Fraction(0))
    report = SplittingReport(complexity, tuple(rows), certificate)
    return gog, report


# -- complexity --------------------------------------------------------------------


def _stable_letter_values(gog: GraphOfGroups, phi: Character):
    """Character values of the stable letters under ``phi``.

    Stable letters are recorded only through the values of the character the
    splitting was built against, so ``phi`` must be a rational multiple of
    it.
    """
    values = []
    for i in range(len(gog.edges)):
        if i not in gog.stable_letters:
            raise SplittingError("missing stable letter value")
        values.append(gog.stable_letters[i])
    if gog.character is None:
        raise SplittingError("splitting records no dual character")
    q = phi.proportion_to(gog.character)
    if q is None:
        raise SplittingError(
            "character is not proportional to the splitting's dual character"
        )
    return [q * v for v in values]


def splitting_complexity(gog: GraphOfGroups, phi: Character) -> Fraction:
    """Minus the sum over positive edges of |phi(t_e)| times the edge
    group's Euler characteristic; zero for an edgeless splitting."""
    if not gog.single_vertex:
        raise SplittingError("complexity is defined for single-vertex splittings")
    if not gog.edges:
        return Fraction(0)
    values = _stable_letter_values(gog, phi)
    total = Fraction(0)
    for e, value in zip(gog.edges, values):
        total -= abs(value) * euler_of(e.group, gog.complex)
    return total


# -- cyclic cover truncations ----------------------------------------------------------


@dataclass(frozen=True)
class CoverTruncation:
    """Finite window of the infinite cyclic cover of a single-vertex
    splitting: vertex copies v_-k .. v_k and the edge lifts that fit.

    ``lift_counts`` is per positive edge; the rank triple is
    (sum of vertex-copy b1, sum over edges of lifts * b1, difference).
    """

    k: int
    vertex_count: int
    edges: tuple
    lift_counts: tuple
    connected: bool
    vertex_rank_sum: Fraction
    edge_rank_sum: Fraction
    rank_difference: Fraction

    def to_json_doc(self):
        return {
            "k": self.k,
            "vertex_count": self.vertex_count,
            "lift_counts": list(self.lift_counts),
            "connected": self.connected,
            "vertex_rank_sum": format_rational(self.vertex_rank_sum),
            "edge_rank_sum": format_rational(self.edge_rank_sum),
            "rank_difference": format_rational(self.rank_difference),
        }


def cyclic_cover_truncation(
    gog: GraphOfGroups, phi: Character, k: int, cap=None
) -> CoverTruncation:
    """Build the window with vertices v_i, |i| <= k, and one lift of each
    loop from v_i to v_(i + phi(t_e)) whenever both ends are in range."""
    if not gog.single_vertex:
        raise SplittingError("truncation is defined for single-vertex splittings")
    if k < 0:
        raise SplittingError("truncation level must be nonnegative")
    if not gog.edges:
        raise SplittingError("truncation needs at least one stable letter")
    values = _stable_letter_values(gog, phi)
    steps = []
    g = 0
    for value in values:
        if value.denominator != 1 or value == 0:
            raise SplittingError("stable letters must have nonzero integer values")
        steps.append(value.numerator)
        g = math.gcd(g, abs(value.numerator))
    if g != 1:
        raise SplittingError("stable letter values must have gcd 1")

    built = []
    counts = [0] * len(steps)
    for idx, m in enumerate(steps):
        for i in range(-k, k + 1):
            j = i + m
            if -k <= j <= k:
                built.append((idx, i, j))
                counts[idx] += 1

    parent = {i: i for i in range(-k, k + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, i, j in built:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    connected = len({find(i) for i in range(-k, k + 1)}) == 1

    b1_vertex = b1_of(gog.vertex_groups[0], gog.complex, cap)
    vertex_rank_sum = (2 * k + 1) * b1_vertex
    edge_rank_sum = sum(
        (
            counts[idx] * b1_of(e.group, gog.complex, cap)
            for idx, e in enumerate(gog.edges)
        ),
        start=Fraction(0),
    )
    return CoverTruncation(
        k,
        2 * k + 1,
        tuple(built),
        tuple(counts),
        connected,
        vertex_rank_sum,
        edge_rank_sum,
        vertex_rank_sum - edge_rank_sum,
    )
