"""Exact symbolic engine for the super Connes-Moscovici Hopf algebra."""

from .core import GradedTensor, SuperPoly, gen, grading, normalize_monomial, tensor, tensor_mul
from .kernels import BACKEND
from .uenv import UEnvElement, pbw_normalize

__all__ = [
    "BACKEND", "GradedTensor", "SuperPoly", "UEnvElement", "gen", "grading",
    "normalize_monomial", "pbw_normalize", "tensor", "tensor_mul",
]

__version__ = "0.1.0"
