"""Exact arithmetic for Jacobi-Jordan algebras: axioms, modules, Frobenius
forms, crossed products, second cohomology, co-flag extensions, the quantum
Yang-Baxter operator and isomorphism search over prime fields."""

from .algebra import Algebra, analyze
from .field import GF, QQ, Scalar, parse_field
from .linalg import Matrix, Subspace

__all__ = ["Algebra", "analyze", "GF", "QQ", "Scalar", "parse_field", "Matrix", "Subspace"]
__version__ = "0.1.0"
