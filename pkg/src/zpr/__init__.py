"""Submodules of (Z/p^r)^n: standard forms, p-bases, duals, sums and intersections."""
from .arith import RingParams, make_ring, p_adic_digits, recompose, unit_inverse, valuation
from .duality import dual, inner_product, intersect, sum_modules, verify_dimension_identities
from .errors import (
    BadExponent,
    DimensionMismatch,
    NotAPBasis,
    NotASubmoduleOf,
    NotAUnit,
    NotPrime,
    RingOverflow,
    TooLarge,
    ZprError,
)
from .module import (
    GeneratorSet,
    StandardForm,
    Submodule,
    cardinality,
    is_submodule_of,
    parameters,
    solve,
    span_membership,
    standard_form,
    submodules_equal,
)
from .pbasis import (
    PBasis,
    extend_p_basis,
    is_p_generator_sequence,
    is_p_independent,
    make_pbasis,
    p_basis,
    p_basis_from_standard_form,
    p_coordinates,
    p_dimension,
    socle,
)

__version__ = "0.1.0"
