"""Exact DAHA knot polynomials for torus knots and iterated cables, with a colored Jones oracle."""
from .exactalg import LaurentQ, LaurentQT, LaurentX, RatQT, monomial_ratio, q, specialize_t, t
from .invariants import CableSpec, cd_newton, cherednik_torus, compute, iterated_topological, sign_torus
from .joracle import oracle_jones
from .macdonald import macdonald_poly, sign_macdonald_poly

__all__ = [
    "LaurentQ", "LaurentQT", "LaurentX", "RatQT", "monomial_ratio", "q", "t", "specialize_t",
    "CableSpec", "cd_newton", "cherednik_torus", "compute", "iterated_topological", "sign_torus",
    "oracle_jones", "macdonald_poly", "sign_macdonald_poly",
]
