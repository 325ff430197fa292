"""Exact-arithmetic toolkit for block Gray maps over Z_2m.

The package builds linear codes over Z_2m, maps them to binary codes with
either the pointwise Hadamard-block map or the set-valued partition map,
computes exact weight enumerators and their MacWilliams-type transforms,
and verifies perfectness, Hadamard parameters, formal duality, and full
monomial canonicalization of Hadamard-parameter codes.
"""

from .ring import (
    DEFAULT_BUDGET,
    DIAMOND,
    STAR,
    BudgetExceededError,
    Modulus,
    RingWord,
    additive_order,
    dist,
    unit_inverse,
    wt_diamond,
    wt_star,
)
from .linear import (
    INFINITE_DISTANCE,
    LinearZCode,
    ZMatrix,
    apply_monomial,
    apply_permutation,
    dual,
    kernel,
    min_distance,
    row_canonical,
    span_words,
    syndrome_image_size,
)
from .gray import (
    BinaryCode,
    OrderedHadamard,
    PerfectPartition,
    bits_to_string,
    image_phi,
    image_phi_cap,
    iter_image_phi_cap,
    member_of_phi_cap_image,
    paley_hadamard12,
    phi,
    phi_cap,
    standard_partition,
    string_to_bits,
    sylvester_hadamard,
)
from .wenum import (
    CASE_CONTAINS_ZERO,
    CASE_EVEN_NO_ZERO,
    CASE_ODD_WEIGHT,
    HammingWE,
    SymmetrizedWE,
    carlet_transform,
    compose_sw,
    hamming_we,
    ext_perfect_transform,
    macwilliams_binary,
    symmetrized_we,
    symmetrized_we_from_check,
)
from .families import TypeProfile, build_bi, code_di, code_hi, z24_examples
from .checks import (
    VerificationReport,
    canonicalize,
    extended_one_perfect_oracle,
    find_unit_codeword,
    hadamard_classification_census,
    is_extended_one_perfect,
    is_hadamard,
    isometry_census,
    one_prime_perfect_criterion,
    one_prime_perfect_definition,
    verify_duality,
)

__version__ = "0.1.0"
