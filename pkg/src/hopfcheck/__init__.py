"""Exact-arithmetic toolkit for finite-dimensional (braided) Hopf algebras."""

from .fields import Field, make_field, factor_poly
from .hopf import HopfAlgebra, YDModule, Tensor3

__all__ = ["Field", "make_field", "factor_poly", "HopfAlgebra", "YDModule", "Tensor3"]
