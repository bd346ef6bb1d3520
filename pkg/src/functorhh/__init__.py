"""
Hochschild cohomology of monoids in categories of linear functors from a
finite strict symmetric monoidal linear category, computed exactly over Q
or GF(p).
"""

from .category import CategoryPresentation, Morphism, ValidationError, Violation, validate_presentation
from .complexes import CochainComplex, cohomology_of_complex, les_of_complex_ses
from .day import day_value, separability_witness, transport_separability
from .extensions import baer_sum, extension_equivalence, extension_from_cocycle, semidirect_product
from .functors import LinearFunctor, validate_functor, yoneda_dress_shift, yoneda_functor
from .hochschild import Cochain, HochschildComplex, commutant, derivation_spaces, hh_compute
from .linalg import Field
from .monoids import Bimodule, Monoid, opposite_monoid, regular_bimodule, validate_bimodule, validate_monoid
from .multilinear import MultilinearSpace
from .oracle import classical_hh, crosscheck, lift_algebra, random_algebra
from .products import bracket_deg1, cup_product

__version__ = "0.1.0"

__all__ = [
    "Bimodule", "CategoryPresentation", "Cochain", "CochainComplex", "Field", "HochschildComplex",
    "LinearFunctor", "Monoid", "Morphism", "MultilinearSpace", "ValidationError", "Violation",
    "baer_sum", "bracket_deg1", "classical_hh", "cohomology_of_complex", "commutant", "crosscheck",
    "cup_product", "day_value", "derivation_spaces", "extension_equivalence", "extension_from_cocycle",
    "hh_compute", "les_of_complex_ses", "lift_algebra", "opposite_monoid", "random_algebra",
    "regular_bimodule", "semidirect_product", "separability_witness", "transport_separability",
    "validate_bimodule", "validate_functor", "validate_monoid", "validate_presentation",
    "yoneda_dress_shift", "yoneda_functor",
]
