"""Partial automorphisms of odd fences: enumeration, generation, analysis.

A fence on {1, …, n} is the zig-zag order 1 ≺ 2 ≻ 3 ≺ 4 ≻ ⋯; for odd n its
partial automorphisms (injective partial maps preserving and reflecting the
order) form an inverse semigroup.  This package enumerates those semigroups,
builds and closes generating sets with minimal-length witness words, runs
two constructive decompositions, and machine-checks a registry of structural
claims, including the ingredients of the minimal-generating-set count.
"""

from .analysis import (
    Bf4Check,
    ClaimCheck,
    ClaimSpec,
    Lemma6Check,
    Prop7AlphaCheck,
    Prop7ClassCheck,
    Prop7Result,
    RClass,
    VerificationReport,
    VerifyContext,
    claim_registry,
    minimal_rank_exhaustive,
    r_class,
    rank_formula,
    rank_grade,
    run_verification,
    verify_lemma6,
    verify_lemma_bf4,
    verify_prop7_claims,
)
from .closure import (
    ClosureResult,
    ClosureStats,
    GenerationCheck,
    NotGeneratedError,
    Word,
    close,
    close_excluding,
    evaluate_word,
    factorize,
    generator_cache_key,
    verify_generates,
)
from .constructions import (
    ConvexExtension,
    ParityDecomposition,
    convex_extend,
    parity_reduce,
)
from .fence import (
    UNDEF,
    CapacityError,
    MapFormatError,
    PartialInjection,
    comparable,
    compose,
    decode,
    encode,
    fence_less,
    format_map,
    inverse,
    is_convex,
    is_partial_automorphism,
    order_violation,
    parse_map,
    restrict_identity,
)
from .generators import (
    GeneratorSet,
    ParityWitness,
    alpha,
    alpha_even,
    alpha_odd,
    alpha_pair,
    beta_even,
    beta_odd,
    build_G,
    build_J,
    gamma,
    parity_class,
    parity_points,
)
from .oracle import (
    ENUMERATION_CAP,
    ElementUniverse,
    count_by_rank,
    enumerate_FI,
    enumerate_naive,
    enumeration_strategy,
    universe_from_codes,
)

__version__ = "0.1.0"

__all__ = [
    "Bf4Check",
    "CapacityError",
    "ClaimCheck",
    "ClaimSpec",
    "ClosureResult",
    "ClosureStats",
    "ConvexExtension",
    "ElementUniverse",
    "ENUMERATION_CAP",
    "GenerationCheck",
    "GeneratorSet",
    "Lemma6Check",
    "MapFormatError",
    "NotGeneratedError",
    "ParityDecomposition",
    "ParityWitness",
    "PartialInjection",
    "Prop7AlphaCheck",
    "Prop7ClassCheck",
    "Prop7Result",
    "RClass",
    "UNDEF",
    "VerificationReport",
    "VerifyContext",
    "Word",
    "alpha",
    "alpha_even",
    "alpha_odd",
    "alpha_pair",
    "beta_even",
    "beta_odd",
    "build_G",
    "build_J",
    "claim_registry",
    "close",
    "close_excluding",
    "comparable",
    "compose",
    "convex_extend",
    "count_by_rank",
    "decode",
    "encode",
    "enumerate_FI",
    "enumerate_naive",
    "enumeration_strategy",
    "evaluate_word",
    "factorize",
    "fence_less",
    "format_map",
    "gamma",
    "generator_cache_key",
    "inverse",
    "is_convex",
    "is_partial_automorphism",
    "minimal_rank_exhaustive",
    "order_violation",
    "parity_class",
    "parity_points",
    "parity_reduce",
    "parse_map",
    "r_class",
    "rank_formula",
    "rank_grade",
    "restrict_identity",
    "run_verification",
    "universe_from_codes",
    "verify_generates",
    "verify_lemma6",
    "verify_lemma_bf4",
    "verify_prop7_claims",
]
