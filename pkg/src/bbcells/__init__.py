"""Exact computations of limit cells for split-torus actions, with the
Hilbert scheme of points on the plane as the worked application."""

from .algebra import (
    GradedPolynomial,
    GradedPresentation,
    MonomialQuotient,
    VariableWeighting,
    algebraize_check,
    bb_plus,
    check_homogeneous,
    fixed_locus,
    open_immersion_check,
    outsider_variables,
    stabilization_check,
    truncate,
    weight_of,
)
from .hilb import (
    cell_dimension,
    ideal_from_partition,
    intersection_dimension,
    partitions,
    poincare_histogram,
    tangent_character_armleg,
    tangent_character_linalg,
)
from .lattice import (
    AffineMonoid,
    KempfVector,
    LatticeProjection,
    cone_from_generators,
    contains,
    has_zero,
    kempf_vector,
    reduce_to_zero,
    units,
)
from .polyparse import parse_polynomial, print_polynomial

__version__ = "0.1.0"
