"""Exact arithmetic foundation: cyclotomic constants, polynomials, rational
functions, factorization, linear algebra and integer lattices."""

from .constants import Constant, CyclotomicField, cyclotomic_polynomial, is_primitive_root
from .factor import factor_univariate, monic_divisors, rational_roots
from .lattice import integer_kernel, kernel_with_congruences, lattice_row_basis
from .matrix import Matrix, identity_matrix
from .poly import Poly, dispersion, interpolate, nonneg_integer_roots, poly_gcd, poly_lcm, resultant
from .ratfun import RatFun

__all__ = [
    "Constant",
    "CyclotomicField",
    "cyclotomic_polynomial",
    "is_primitive_root",
    "factor_univariate",
    "monic_divisors",
    "rational_roots",
    "integer_kernel",
    "kernel_with_congruences",
    "lattice_row_basis",
    "Matrix",
    "identity_matrix",
    "Poly",
    "dispersion",
    "interpolate",
    "nonneg_integer_roots",
    "poly_gcd",
    "poly_lcm",
    "resultant",
    "RatFun",
]
