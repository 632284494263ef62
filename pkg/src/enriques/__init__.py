"""Exact computations in the numerical lattice of an Enriques surface."""
from .lattice import (
    AMPLE_REF, E8_CLASS, E910, GRAM, NumClass, PicClass, SurfaceModel,
    divisibility, epsilon_invariant, is_effective, is_two_divisible_num, pair,
)

__all__ = [
    "AMPLE_REF", "E8_CLASS", "E910", "GRAM", "NumClass", "PicClass", "SurfaceModel",
    "divisibility", "epsilon_invariant", "is_effective", "is_two_divisible_num", "pair",
]
