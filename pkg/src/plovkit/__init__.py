"""Exact verification toolkit for the combinatorics and slow dynamics of
zero-entropy automorphisms: restricted partitions, weighted incidence
matrices, their realization as lowering operators, and polynomial volume
growth on powers of an elliptic curve."""

__version__ = "0.1.0"

from .abelian_dynamics import (
    AbelianModel,
    DynReport,
    PositiveEntropyError,
    PositivityReport,
    degree_sequence,
    delta_poly,
    intersection_number,
    jordan_model,
    make_model,
    model_from_json,
    monomial_intersections,
    nilpotent_data,
    ns_operator,
    plov,
    plov_monomial_gap,
    positivity_polynomial_check,
    positivity_sequence,
    pullback,
    quasi_unipotent_reduce,
    reduce_model,
    verify_bounds,
    weakly_trivial,
)
from .exact_linalg import (
    Matrix,
    Poly,
    PolyMatrix,
    binomial_poly,
    chain_product,
    charpoly,
    choose_poly,
    det,
    matmul,
    polydet,
    rank,
)
from .incidence import IncidenceMatrix, build_matrix, bump
from .lefschetz import (
    build_X,
    build_Y,
    prop_midpoint_equality,
    symfun_lefschetz_matrix,
    unimodality_report,
    verify_bracket,
    verify_full_rank,
    verify_hard_lefschetz,
)
from .partitions import (
    Partition,
    PartitionList,
    count_partitions,
    enumerate_partitions,
    from_exponents,
    gaussian_binomial,
)

__all__ = [
    "AbelianModel",
    "DynReport",
    "IncidenceMatrix",
    "Matrix",
    "Partition",
    "PartitionList",
    "Poly",
    "PolyMatrix",
    "PositiveEntropyError",
    "PositivityReport",
    "binomial_poly",
    "build_X",
    "build_Y",
    "build_matrix",
    "bump",
    "chain_product",
    "charpoly",
    "choose_poly",
    "count_partitions",
    "degree_sequence",
    "delta_poly",
    "det",
    "enumerate_partitions",
    "from_exponents",
    "gaussian_binomial",
    "intersection_number",
    "jordan_model",
    "make_model",
    "matmul",
    "model_from_json",
    "monomial_intersections",
    "nilpotent_data",
    "ns_operator",
    "plov",
    "plov_monomial_gap",
    "polydet",
    "positivity_polynomial_check",
    "positivity_sequence",
    "prop_midpoint_equality",
    "pullback",
    "quasi_unipotent_reduce",
    "rank",
    "reduce_model",
    "symfun_lefschetz_matrix",
    "unimodality_report",
    "verify_bounds",
    "verify_bracket",
    "verify_full_rank",
    "verify_hard_lefschetz",
    "weakly_trivial",
]
