"""Exact local weight enumerators on the q-ary hypercube.

Fourier spectra, local distributions and weight enumerators of functions
and perfect colorings of H(n, q), with exact checks of the duality between
enumerators in a pair of orthogonal faces.
"""

from .colorings import (
    Coloring,
    ParameterMatrix,
    builtin_fixture,
    parameter_matrix_of,
    search_colorings,
    spectral_decompose,
    theorem2_identity_check,
)
from .eigen import adjacency_apply, eigenvalue, eigenvalue_number, is_eigenfunction, theorem1_identity_check
from .enumerators import character_face_sum, local_distribution, local_weight_enumerator, lwe_via_spectrum
from .exact import Cyclotomic, HomoPoly, RationalMatrix
from .fourier import (
    FunctionTable,
    SpectrumTable,
    eigenspace_project,
    fourier_forward,
    fourier_forward_fast,
    fourier_inverse,
)
from .hamming import FaceSpec, SpaceParams

__version__ = "0.1.0"
