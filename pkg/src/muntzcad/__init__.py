"""Exact geometry kernel for Muntz-space Bezier design.

A Young diagram together with an order n fixes a sparse monomial space
span(1, t^{s_1}, ..., t^{s_n}); curves carry the diagram as a shape
parameter.  Everything is computed over exact rationals: blossoms,
generalized Bernstein bases, de Casteljau evaluation, dimension elevation,
derivatives, C1 joins, and tensor-product surfaces.
"""

from .bernstein import (
    BernsteinBasis,
    bernstein_basis,
    bernstein_via_descent,
    classical_bernstein,
    derivative_basis_equal,
    derivative_basis_general,
    elevation_factors,
    endpoint_derivatives,
)
from .blossom import MuntzSpace, blossom, blossom_oracle, make_space, pseudo_affinity
from .geometry import (
    MuntzCurve,
    TensorSurface,
    coordinate_polynomials,
    curve_derivative,
    curve_eval,
    curve_eval_casteljau,
    elevate,
    elevation_weights,
    join_c1_interval,
    join_c1_q1,
    make_curve,
    make_surface,
    sample_curve,
    sample_surface,
    surface_eval,
)
from .partitions import (
    FrobeniusForm,
    MuntzTableau,
    Partition,
    border_complement,
    bottom_partition,
    conjugate,
    descent_chain,
    dimension_elevation_partitions,
    enumerate_ssyt,
    exponents_to_partition,
    hook_and_content,
    hook_ratio_first_row,
    is_dimension_elevation,
    make_partition,
    muntz_tableau,
    partition_to_exponents,
    ssyt_count,
)
from .paths import (
    DeCasteljauPath,
    de_casteljau_eval,
    enumerate_paths,
    path_sum_basis,
    path_weight,
)
from .sparsepoly import SparsePolynomial
from .symfunc import (
    ArgMultiset,
    complete,
    elementary,
    schur,
    schur_bialternant,
    schur_giambelli,
    schur_nk,
    schur_ssyt_oracle,
    skew_schur,
)

__version__ = "0.1.0"

__all__ = [
    "ArgMultiset",
    "BernsteinBasis",
    "DeCasteljauPath",
    "FrobeniusForm",
    "MuntzCurve",
    "MuntzSpace",
    "MuntzTableau",
    "Partition",
    "SparsePolynomial",
    "TensorSurface",
    "bernstein_basis",
    "bernstein_via_descent",
    "blossom",
    "blossom_oracle",
    "border_complement",
    "bottom_partition",
    "classical_bernstein",
    "complete",
    "conjugate",
    "coordinate_polynomials",
    "curve_derivative",
    "curve_eval",
    "curve_eval_casteljau",
    "de_casteljau_eval",
    "derivative_basis_equal",
    "derivative_basis_general",
    "descent_chain",
    "dimension_elevation_partitions",
    "elementary",
    "elevate",
    "elevation_factors",
    "elevation_weights",
    "endpoint_derivatives",
    "enumerate_paths",
    "enumerate_ssyt",
    "exponents_to_partition",
    "hook_and_content",
    "hook_ratio_first_row",
    "is_dimension_elevation",
    "join_c1_interval",
    "join_c1_q1",
    "make_curve",
    "make_partition",
    "make_space",
    "make_surface",
    "muntz_tableau",
    "partition_to_exponents",
    "path_sum_basis",
    "path_weight",
    "pseudo_affinity",
    "sample_curve",
    "sample_surface",
    "schur",
    "schur_bialternant",
    "schur_giambelli",
    "schur_nk",
    "schur_ssyt_oracle",
    "skew_schur",
    "ssyt_count",
    "surface_eval",
]
