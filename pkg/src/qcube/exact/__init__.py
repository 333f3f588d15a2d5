from .cyclotomic import Cyclotomic, cyc_arith, cyc_as_rational, cyc_normalize, cyclotomic_polynomial
from .matrix import RationalMatrix, independent_subset, mat_inverse, mat_nullspace
from .poly import DIFF, SUM, GradedPoly, HomoPoly

__all__ = [
    "Cyclotomic",
    "cyc_arith",
    "cyc_as_rational",
    "cyc_normalize",
    "cyclotomic_polynomial",
    "RationalMatrix",
    "independent_subset",
    "mat_inverse",
    "mat_nullspace",
    "DIFF",
    "SUM",
    "GradedPoly",
    "HomoPoly",
]
