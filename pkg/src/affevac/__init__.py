"""Affine evacuation on tabloids and the enumeration of its fixed points."""

from .core import (
    AffinePermutation,
    NotStandardizable,
    ParseError,
    Tabloid,
    affine_descents,
    knuth_neighbors,
    partitions,
    rotate,
    rrss,
    tabloid_descents,
    tabloids,
)
from .poly import (
    b_statistic,
    character,
    greens_polynomial,
    kostka_foulkes,
    kostka_foulkes_fermionic,
    q_binomial,
    rho2,
)
from .qpoly import QPolynomial
from .rigged import (
    Configuration,
    InvalidConfiguration,
    RiggedConfiguration,
    cc,
    enumerate_rigged,
    phi,
    phi_inverse,
    theta,
    vacancy,
)
from .rmatrix import (
    affine_evacuation,
    affine_evacuation_via_rsk,
    evacuation_variant,
    promotion,
    r_matrix,
    rectangle_evacuation,
)
from .tableau import (
    TwoRowArray,
    charge,
    e_d,
    e_d_star,
    finite_evacuation,
    ls_action,
    rsk,
    rsk_inverse,
)
from .verify import (
    FixedPointReport,
    OddMultiplicity,
    SizeLimit,
    closed_form_even_multiplicities,
    closed_form_rectangle,
    count_self_evacuating,
    count_self_evacuating_syt,
    count_ssyt_fixed,
    count_variant_fixed,
    enumerate_tabloids,
    knuth_graph,
    recurrence_rhs,
)

__version__ = "0.1.0"

__all__ = [
    "QPolynomial",
    "affine_descents",
    "affine_evacuation",
    "affine_evacuation_via_rsk",
    "AffinePermutation",
    "b_statistic",
    "cc",
    "character",
    "charge",
    "closed_form_even_multiplicities",
    "closed_form_rectangle",
    "Configuration",
    "count_self_evacuating",
    "count_self_evacuating_syt",
    "count_ssyt_fixed",
    "count_variant_fixed",
    "e_d",
    "e_d_star",
    "enumerate_rigged",
    "enumerate_tabloids",
    "evacuation_variant",
    "finite_evacuation",
    "FixedPointReport",
    "greens_polynomial",
    "InvalidConfiguration",
    "knuth_graph",
    "knuth_neighbors",
    "kostka_foulkes",
    "kostka_foulkes_fermionic",
    "ls_action",
    "NotStandardizable",
    "OddMultiplicity",
    "ParseError",
    "partitions",
    "phi",
    "phi_inverse",
    "promotion",
    "q_binomial",
    "r_matrix",
    "rectangle_evacuation",
    "recurrence_rhs",
    "rho2",
    "RiggedConfiguration",
    "rotate",
    "rrss",
    "rsk",
    "rsk_inverse",
    "SizeLimit",
    "Tabloid",
    "tabloid_descents",
    "tabloids",
    "theta",
    "TwoRowArray",
    "vacancy",
]
