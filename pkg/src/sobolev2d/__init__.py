"""Exact monic Sobolev orthogonal polynomials on product Laguerre and Gegenbauer domains."""

__version__ = "0.1.0"

from .errors import InvariantViolation, ParameterDomainError, SingularParameterError
from .linalg import RationalMatrix
from .poly import BiPoly, UniPoly
from .product_basis import (
    ProductWeight,
    grad_gram_entry,
    matrices_DC,
    product_norm,
    product_P,
    product_Q,
)
from .sobolev import (
    DegreeBlock,
    SobolevBasis,
    assemble,
    build_basis,
    corner_shift,
    iterate,
    laguerre_linear_solve,
)
from .univariate import (
    WeightFamily,
    coherence_coefficient,
    monic_sequence,
    q_sequence,
    squared_norm,
)

__all__ = [
    "BiPoly", "DegreeBlock", "InvariantViolation", "ParameterDomainError", "ProductWeight",
    "RationalMatrix", "SingularParameterError", "SobolevBasis", "UniPoly", "WeightFamily",
    "assemble", "build_basis", "coherence_coefficient", "corner_shift", "grad_gram_entry",
    "iterate", "laguerre_linear_solve", "matrices_DC", "monic_sequence", "product_P",
    "product_Q", "product_norm", "q_sequence", "squared_norm",
]
