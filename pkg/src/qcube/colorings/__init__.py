from .core import (
    Coloring,
    ColoringVerdict,
    LocalDistributionMatrix,
    MatrixPower,
    ParameterMatrix,
    SpectralData,
    ZPoly,
    column_sums_ok,
    h_matrix,
    lift_functions,
    local_distribution_matrix,
    matrix_enumerator_power,
    parameter_matrix_of,
    spectral_decompose,
    theorem2_identity_check,
    theorem2_matrix_check,
    vector_enumerator,
    verify_perfect,
)
from .fixtures import FIXTURES, builtin_fixture, hamming_code
from .search import exhaustive_colorings, search_colorings
