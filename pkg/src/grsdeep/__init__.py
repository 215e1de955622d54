"""Exact deep-hole toolkit for generalized Reed-Solomon codes."""
from .code import (
    DEFAULT_BUDGET,
    EvaluationSet,
    GrsCode,
    code_new,
    encode,
    enumerate_codewords,
    hamming_distance,
    hamming_weight,
    interpolate_word,
    is_codeword,
    word_degree,
)
from .deephole import (
    CanonicalForm,
    DeepHoleSpec,
    WitnessCertificate,
    canonical_form,
    construct_deep_hole,
    orbit_size,
    verify_deep_hole,
    witness_polynomial,
)
from .distance import (
    DistanceCertificate,
    cross_check,
    distance_bounds,
    error_distance,
    error_distance_exhaustive,
    error_distance_subsets,
)
from .gf import FiniteField, get_field, parse_field
from .poly import NEG_INF, Polynomial, lagrange_interpolate, reduce_mod_vanishing, vanishing_poly

__version__ = "0.1.0"
