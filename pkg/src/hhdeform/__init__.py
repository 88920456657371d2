"""Exact computation of Hochschild cohomology for a family of deformed
self-injective cycle algebras, with an independent bar-complex oracle."""

from .algebra import (
    Algebra,
    AlgebraElement,
    AlgebraSpec,
    BasisMonomial,
    NonGenericParameters,
    algebra,
    build_algebra,
)
from .bar import bar_cochain_dimension, bar_cohomology_dimension
from .freepaths import (
    FreeElement,
    FreePath,
    free_multiply,
    g_generators,
    reduce_to_algebra,
    verify_g_recursions,
)
from .homcomplex import (
    coboundary_matrix,
    cohomology_dimension,
    hom_dimension,
    hom_space_basis,
    kernel_image_dims,
)
from .resolution import (
    BimoduleMap,
    Generator,
    check_complex,
    compose,
    differential,
    generators,
    underlying_matrix,
    verify_exactness,
)
from .ring import (
    Cochain,
    CohomologyClass,
    canonical_generators,
    cup_product,
    lift_cocycle,
    ring_report,
)

__all__ = [
    "Algebra",
    "AlgebraElement",
    "AlgebraSpec",
    "BasisMonomial",
    "BimoduleMap",
    "Cochain",
    "CohomologyClass",
    "FreeElement",
    "FreePath",
    "Generator",
    "NonGenericParameters",
    "algebra",
    "bar_cochain_dimension",
    "bar_cohomology_dimension",
    "build_algebra",
    "canonical_generators",
    "check_complex",
    "coboundary_matrix",
    "cohomology_dimension",
    "compose",
    "cup_product",
    "differential",
    "free_multiply",
    "g_generators",
    "generators",
    "hom_dimension",
    "hom_space_basis",
    "kernel_image_dims",
    "lift_cocycle",
    "reduce_to_algebra",
    "ring_report",
    "underlying_matrix",
    "verify_exactness",
    "verify_g_recursions",
]
