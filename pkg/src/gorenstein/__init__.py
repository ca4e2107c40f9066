"""Artinian Gorenstein h-vector toolkit.

Combinatorics of O-sequences and SI-sequences, enumeration of candidate
Gorenstein h-vectors in codimension four, dense homogeneous polynomial
arithmetic over Z/p, degreewise ideal linear algebra (Hilbert functions,
colon ideals, restrictions, socles), apolarity via catalecticant ranks,
and a set of randomized verification experiments.
"""

from .apolarity import (
    DimensionError,
    DualForm,
    RealizationResult,
    TargetNotSIError,
    annihilator,
    annihilator_ideal,
    catalecticant,
    evaluation_dual,
    hvector_of_dual,
    materialize_dual,
    mixed_dual,
    monomial_dual,
    nonunimodal_block_witness,
    nonunimodal_codim13_search,
    random_dual,
    realization_search,
)
from .enumeration import (
    LABEL_GORENSTEIN,
    LABEL_UNDETERMINED,
    QUARTIC_CAP,
    classify_codim4,
    count_si,
    gorenstein_codim4,
    si_sequences,
)
from .gfpoly import (
    DEFAULT_PRIME,
    SECOND_PRIME,
    DegreeMismatchError,
    DegreeSpan,
    FieldMismatchError,
    GcdUndefinedError,
    GradedPoly,
    PolyParseError,
    PrimeField,
    gcd,
    is_prime,
    monomial_index,
    monomials,
    num_monomials,
    parse_poly,
    poly_text,
    span_gcd,
    try_divide,
)
from .idealcalc import (
    HilbertProfile,
    IdealPresentation,
    NonArtinianError,
    colon,
    colon_ideal,
    degree_span,
    dump_ideal,
    hilbert,
    is_gorenstein,
    load_ideal,
    restrict,
    socle_profile,
)
from .seqcomb import (
    TAG_SI_CODIM_LE_3,
    TAG_SI_H4_LE_33,
    TAG_UNIMODAL_H4_LE_33,
    TAG_UNIMODAL_MIDDLE_CAP,
    BinomialExpansion,
    HVector,
    InvalidDegreeError,
    NotGorensteinCandidateError,
    evaluate_terms,
    expand,
    expansion_terms,
    first_difference,
    green_reduce,
    guarantees,
    is_o_sequence,
    is_si_sequence,
    is_symmetric,
    is_unimodal,
    macaulay_bound,
)
from .verify import (
    Report,
    RestrictionTable,
    SUITES,
    check_colon_identity,
    check_gcd_criterion,
    colon_identity_suite,
    gcd_criterion_suite,
    multi_generator_probe,
    restriction_suite,
    restriction_table,
    run_suite,
    theorem_forward_scan,
    wlp_probe,
)
from .version import __version__

__all__ = [
    "__version__",
    # sequence combinatorics
    "BinomialExpansion",
    "HVector",
    "InvalidDegreeError",
    "NotGorensteinCandidateError",
    "TAG_SI_CODIM_LE_3",
    "TAG_SI_H4_LE_33",
    "TAG_UNIMODAL_H4_LE_33",
    "TAG_UNIMODAL_MIDDLE_CAP",
    "evaluate_terms",
    "expand",
    "expansion_terms",
    "first_difference",
    "green_reduce",
    "guarantees",
    "is_o_sequence",
    "is_si_sequence",
    "is_symmetric",
    "is_unimodal",
    "macaulay_bound",
    # enumeration
    "LABEL_GORENSTEIN",
    "LABEL_UNDETERMINED",
    "QUARTIC_CAP",
    "classify_codim4",
    "count_si",
    "gorenstein_codim4",
    "si_sequences",
    # polynomials over Z/p
    "DEFAULT_PRIME",
    "SECOND_PRIME",
    "DegreeMismatchError",
    "DegreeSpan",
    "FieldMismatchError",
    "GcdUndefinedError",
    "GradedPoly",
    "PolyParseError",
    "PrimeField",
    "gcd",
    "is_prime",
    "monomial_index",
    "monomials",
    "num_monomials",
    "parse_poly",
    "poly_text",
    "span_gcd",
    "try_divide",
    # ideal calculations
    "HilbertProfile",
    "IdealPresentation",
    "NonArtinianError",
    "colon",
    "colon_ideal",
    "degree_span",
    "dump_ideal",
    "hilbert",
    "is_gorenstein",
    "load_ideal",
    "restrict",
    "socle_profile",
    # apolarity
    "DimensionError",
    "DualForm",
    "RealizationResult",
    "TargetNotSIError",
    "annihilator",
    "annihilator_ideal",
    "catalecticant",
    "evaluation_dual",
    "hvector_of_dual",
    "materialize_dual",
    "mixed_dual",
    "monomial_dual",
    "nonunimodal_block_witness",
    "nonunimodal_codim13_search",
    "random_dual",
    "realization_search",
    # verification
    "Report",
    "RestrictionTable",
    "SUITES",
    "check_colon_identity",
    "check_gcd_criterion",
    "colon_identity_suite",
    "gcd_criterion_suite",
    "multi_generator_probe",
    "restriction_suite",
    "restriction_table",
    "run_suite",
    "theorem_forward_scan",
    "wlp_probe",
]
