"""Exact arithmetic substrate: Q(i) scalars, polynomials, matrices, Thiele."""

from .gaussian import GaussianRational, gr, I, ONE, ZERO
from .matrix import ExactMatrix, mat_det, mat_inverse, trace_product
from .multipoly import (
    DEGREVLEX,
    LEX,
    MonomialOrder,
    MultiPoly,
    PolyRing,
    divide_by_linear_diff,
    vandermonde,
)
from .thiele import thiele_interpolate
from .unipoly import RatFun, UniPoly, cross_equal, ratfun_eval_complex

__all__ = [
    "GaussianRational",
    "gr",
    "I",
    "ONE",
    "ZERO",
    "ExactMatrix",
    "mat_det",
    "mat_inverse",
    "trace_product",
    "MonomialOrder",
    "MultiPoly",
    "PolyRing",
    "DEGREVLEX",
    "LEX",
    "divide_by_linear_diff",
    "vandermonde",
    "thiele_interpolate",
    "UniPoly",
    "RatFun",
    "cross_equal",
    "ratfun_eval_complex",
]
