"""Exact computation of a Thurston-type semi-norm for the groups of finite
simplicial graphs: chordality and clique trees, rational homology, closed
form L2-invariants, the zonotope polytope with its thickness norm, dual
graph-of-groups splittings, and a cross-checking harness.
"""

from .characters import Character, character_from_json_doc, parse_character
from .complexes import (
    DEFAULT_CLIQUE_CAP,
    ChordalityWitness,
    FlagComplex,
    clique_tree,
    complex_from_json_doc,
    find_separating_clique,
    is_chordal,
    lex_bfs,
    parse_complex,
)
from .errors import (
    AmbientMismatchError,
    CharacterDomainError,
    CliqueCapError,
    DisconnectedError,
    InvalidInput,
    NoCliqueSeparatorError,
    NotChordalError,
    NotIntegralError,
    NotOneEndedError,
    NotPrimitiveError,
    ParseError,
    RaagError,
    SplittingError,
    UnknownVertexError,
    ZeroCharacterError,
)
from .homology import ReducedBettiVector, euler_raag, rank_sparse_int, reduced_betti
from .l2 import (
    FiberingReport,
    is_fibered,
    l2_betti_group,
    l2_betti_kernel,
    l2_euler_kernel,
    living_subcomplex,
)
from .polytopes import (
    NormBall,
    ZonotopeElement,
    combine,
    cut_rank_weights,
    l2_polytope,
    negate,
    norm_ball,
    thickness,
    thurston_norm,
)
from .splittings import (
    Amalgam,
    BlockKernel,
    BlockRow,
    CoverTruncation,
    GogEdge,
    GraphOfGroups,
    Parabolic,
    SplittingReport,
    Trivial,
    b1_of,
    clique_tree_splitting,
    cyclic_cover_truncation,
    dual_splitting,
    euler_check,
    euler_of,
    living_blocks,
    splitting_complexity,
)
from .verify import (
    CrossCheckReport,
    SplitMix64,
    cross_check,
    plant_cycle,
    random_chordal,
    random_character,
    random_primitive_character,
    run_suite,
    two_triangles,
    verify_induced_cycle,
    verify_peo,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatchError",
    "Amalgam",
    "BlockKernel",
    "BlockRow",
    "Character",
    "CharacterDomainError",
    "ChordalityWitness",
    "CliqueCapError",
    "CoverTruncation",
    "CrossCheckReport",
    "DEFAULT_CLIQUE_CAP",
    "DisconnectedError",
    "FiberingReport",
    "FlagComplex",
    "GogEdge",
    "GraphOfGroups",
    "InvalidInput",
    "NoCliqueSeparatorError",
    "NormBall",
    "NotChordalError",
    "NotIntegralError",
    "NotOneEndedError",
    "NotPrimitiveError",
    "Parabolic",
    "ParseError",
    "RaagError",
    "ReducedBettiVector",
    "SplitMix64",
    "SplittingError",
    "SplittingReport",
    "Trivial",
    "UnknownVertexError",
    "ZeroCharacterError",
    "ZonotopeElement",
    "b1_of",
    "character_from_json_doc",
    "clique_tree",
    "clique_tree_splitting",
    "combine",
    "complex_from_json_doc",
    "cross_check",
    "cut_rank_weights",
    "cyclic_cover_truncation",
    "dual_splitting",
    "euler_check",
    "euler_of",
    "euler_raag",
    "find_separating_clique",
    "is_chordal",
    "is_fibered",
    "l2_betti_group",
    "l2_betti_kernel",
    "l2_euler_kernel",
    "l2_polytope",
    "lex_bfs",
    "living_blocks",
    "living_subcomplex",
    "negate",
    "norm_ball",
    "parse_character",
    "parse_complex",
    "plant_cycle",
    "random_chordal",
    "random_character",
    "random_primitive_character",
    "rank_sparse_int",
    "reduced_betti",
    "run_suite",
    "splitting_complexity",
    "thickness",
    "thurston_norm",
    "two_triangles",
    "verify_induced_cycle",
    "verify_peo",
]
