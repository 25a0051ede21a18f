"""Exact cluster-algebra computations for the classical finite types.

Closed-form F-polynomials, g-vectors and quantum F-polynomials, checked
against seed mutation, diagram folding and a polygon triangulation model.
"""

__version__ = "0.1.0"

from .closedform import (
    f_polynomial_closed,
    g_vector_closed,
    quantum_f_polynomial_closed,
)
from .exchange import CartanType, matrix_from_arrows, positive_roots
from .oracle import enumerate_finite_type

__all__ = [
    "CartanType",
    "enumerate_finite_type",
    "f_polynomial_closed",
    "g_vector_closed",
    "matrix_from_arrows",
    "positive_roots",
    "quantum_f_polynomial_closed",
]
