"""Exact-arithmetic biderivations, centroids and commuting maps of Hom-Lie algebras."""
from .errors import ConsistencyError, DimensionMismatchError, HomLieError, HypothesisError, ParseError, ValidationError
from .services.algebra import HomLieAlgebra
from .services.representation import Representation, adjoint

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "DimensionMismatchError", "HomLieAlgebra", "HomLieError", "HypothesisError", "ParseError",
    "Representation", "ValidationError", "adjoint",
]
