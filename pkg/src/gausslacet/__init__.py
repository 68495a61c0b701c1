"""Realizability of Gauss codes as 2-face colorable lacets over Z2 linear algebra."""

from gausslacet.errors import (
    BadMultiplicity,
    DimensionMismatch,
    EmptyInput,
    GaussCodeError,
    InternalInconsistency,
    LabelOutOfRange,
    LacetError,
    OddLength,
    RankExceedsP,
    SamePair,
    TooLarge,
    TooManySolutions,
)
from gausslacet.gauss import (
    GaussCode,
    ParityPartition,
    canonicalize,
    interlace,
    interlace_squared,
    parity_partition,
    parse_gauss_code,
)
from gausslacet.klein import (
    ImplicationClass,
    KleinLinearSystem,
    KleinSolution,
    NotRealizable,
    PartitionWitness,
    Realizable,
    build_system,
    classify_pair,
    solution_partition,
    solve,
    verify_solution,
)
from gausslacet.lacet import (
    Surface,
    SurfaceClass,
    b_map,
    b_matrix,
    c_antimap,
    c_map,
    classify_surface,
    connectivity,
    is_orientable,
    kappa,
    min_conn2,
)
from gausslacet.quad import (
    QuadAssignment,
    QuadraticSystem,
    alpha_beta,
    build_quadratic,
    decide_conn2_le_p,
    evaluate,
    export_anf,
    solve_fixed_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "BadMultiplicity",
    "DimensionMismatch",
    "EmptyInput",
    "GaussCodeError",
    "InternalInconsistency",
    "LabelOutOfRange",
    "LacetError",
    "OddLength",
    "RankExceedsP",
    "SamePair",
    "TooLarge",
    "TooManySolutions",
    "GaussCode",
    "ParityPartition",
    "canonicalize",
    "interlace",
    "interlace_squared",
    "parity_partition",
    "parse_gauss_code",
    "ImplicationClass",
    "KleinLinearSystem",
    "KleinSolution",
    "NotRealizable",
    "PartitionWitness",
    "Realizable",
    "build_system",
    "classify_pair",
    "solution_partition",
    "solve",
    "verify_solution",
    "Surface",
    "SurfaceClass",
    "b_map",
    "b_matrix",
    "c_antimap",
    "c_map",
    "classify_surface",
    "connectivity",
    "is_orientable",
    "kappa",
    "min_conn2",
    "QuadAssignment",
    "QuadraticSystem",
    "alpha_beta",
    "build_quadratic",
    "decide_conn2_le_p",
    "evaluate",
    "export_anf",
    "solve_fixed_gamma",
]
