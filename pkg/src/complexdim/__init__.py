"""Complex dimension of closures of finitely generated subgroups of R^n."""

from .dimension import (
    ClosureStructure,
    ComplexDim,
    GroupSpec,
    MHReport,
    build_MH,
    closure_structure,
    complex_dimension_closure,
    densify,
    is_dense_in_ambient,
    is_dense_in_span,
    reduce_to_span,
    span_dim,
)
from .exactnum import RealElement, eval_float, inverse, is_zero, normalize_radicand
from .realparse import parse

__version__ = "0.1.0"

__all__ = [
    "ClosureStructure",
    "ComplexDim",
    "GroupSpec",
    "MHReport",
    "RealElement",
    "build_MH",
    "closure_structure",
    "complex_dimension_closure",
    "densify",
    "eval_float",
    "inverse",
    "is_dense_in_ambient",
    "is_dense_in_span",
    "is_zero",
    "normalize_radicand",
    "parse",
    "reduce_to_span",
    "span_dim",
]
