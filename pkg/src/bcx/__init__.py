"""Bicomplex linear algebra in the idempotent representation."""
from .errors import BcxError, DimensionError, NoSolution, NotInvertible, ParseError, Singular
from .linalg import Basis
from .linmap import BasisPair, LinMap
from .matrix import BCMatrix, block_embedding
from .scalar import (
    E1,
    E2,
    I1,
    I2,
    ONE,
    ZERO,
    BiComplex,
    Classification,
    classify,
    from_cartesian,
    from_complex_pair,
    idempotent_join,
    inverse,
)
from .textio import format_bicomplex, parse_bicomplex, parse_complex
from .tolerance import Tolerances, get_tolerances, tolerance_context
from .vector import BCVector

__version__ = "0.1.0"

__all__ = [
    "BcxError",
    "DimensionError",
    "NoSolution",
    "NotInvertible",
    "ParseError",
    "Singular",
    "Basis",
    "BasisPair",
    "LinMap",
    "BCMatrix",
    "block_embedding",
    "BiComplex",
    "Classification",
    "E1",
    "E2",
    "I1",
    "I2",
    "ONE",
    "ZERO",
    "classify",
    "from_cartesian",
    "from_complex_pair",
    "idempotent_join",
    "inverse",
    "format_bicomplex",
    "parse_bicomplex",
    "parse_complex",
    "Tolerances",
    "get_tolerances",
    "tolerance_context",
    "BCVector",
]
