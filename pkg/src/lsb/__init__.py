"""Exact computations for Lie superalgebras of small superbreadth."""

from .exactlin import F3, F5, F7, QQ, Field, GradedDim, Matrix, Subspace
from .superalg import LieSuperAlgebra, bracket, central_extension, verify_axioms

__all__ = ["F3", "F5", "F7", "QQ", "Field", "GradedDim", "LieSuperAlgebra", "Matrix", "Subspace",
           "bracket", "central_extension", "verify_axioms"]
