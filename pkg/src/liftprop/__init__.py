"""Lifting-property decision engine for finite preorders.

Finite preorders are finite topological spaces (open = upward closed);
their monotone maps are the continuous functions.  This package decides
the lifting property between two maps, re-derives classical notions
(surjective, injective, connected, T0, T1, dense image, induced topology,
Hausdorff, pi0-injective, mono, epi) from it, and checks the results
against direct order-theoretic oracles over exhaustively enumerated
universes.  A small textual notation and a command-line interface sit on
top.
"""

from .lifting import (
    MAP_PROPERTIES,
    PROPERTY_IDS,
    SPACE_PROPERTIES,
    HomCache,
    LiftResult,
    Square,
    Universe,
    characterize,
    epi_lift_result,
    find_diagonal,
    is_epi_cancellation,
    is_epi_upto,
    is_mono_cancellation,
    is_mono_upto,
    lifting_check,
    mono_lift_result,
    orthogonal_class,
    self_lifting_scan,
)
from .notation import (
    BUILTIN_MAPS,
    BUILTIN_SPACES,
    Env,
    ParseError,
    Program,
    ValidationError,
    elaborate,
    encode_result,
    parse,
    print_map,
    print_query,
    print_result,
    print_space,
)
from .oracles import (
    Pi0Partition,
    has_dense_image,
    has_induced_topology,
    is_T0,
    is_T1,
    is_connected,
    is_hausdorff,
    is_injective,
    is_surjective,
    pi0,
    pi0_injective,
    pi0_map,
)
from .preorder import (
    CODIAG,
    EMPTY,
    EMPTY_TO_PT,
    INDISC,
    INDISC_TO_PT,
    PT,
    PT_TO_SIERP_CLOSED,
    SIERP,
    SIERP_TO_PT,
    TWO,
    VEE,
    FinPreorder,
    MonotoneMap,
    NotMonotoneError,
    are_isomorphic,
    build_space,
    codiagonal,
    compose,
    coproduct,
    dedupe_up_to_iso,
    diagonal,
    enumerate_preorders,
    hom_enumerate,
    identity,
    is_isomorphism,
    product,
    to_point,
)
from .verify import SuiteReport, verify_paper

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_MAPS",
    "BUILTIN_SPACES",
    "CODIAG",
    "EMPTY",
    "EMPTY_TO_PT",
    "Env",
    "FinPreorder",
    "HomCache",
    "INDISC",
    "INDISC_TO_PT",
    "LiftResult",
    "MAP_PROPERTIES",
    "MonotoneMap",
    "NotMonotoneError",
    "PROPERTY_IDS",
    "PT",
    "PT_TO_SIERP_CLOSED",
    "ParseError",
    "Pi0Partition",
    "Program",
    "SIERP",
    "SIERP_TO_PT",
    "SPACE_PROPERTIES",
    "Square",
    "SuiteReport",
    "TWO",
    "Universe",
    "VEE",
    "ValidationError",
    "are_isomorphic",
    "build_space",
    "characterize",
    "codiagonal",
    "compose",
    "coproduct",
    "dedupe_up_to_iso",
    "diagonal",
    "elaborate",
    "encode_result",
    "enumerate_preorders",
    "epi_lift_result",
    "find_diagonal",
    "has_dense_image",
    "has_induced_topology",
    "hom_enumerate",
    "identity",
    "is_T0",
    "is_T1",
    "is_connected",
    "is_epi_cancellation",
    "is_epi_upto",
    "is_hausdorff",
    "is_injective",
    "is_isomorphism",
    "is_mono_cancellation",
    "is_mono_upto",
    "is_surjective",
    "lifting_check",
    "mono_lift_result",
    "orthogonal_class",
    "parse",
    "pi0",
    "pi0_injective",
    "pi0_map",
    "print_map",
    "print_query",
    "print_result",
    "print_space",
    "product",
    "self_lifting_scan",
    "to_point",
    "verify_paper",
]
