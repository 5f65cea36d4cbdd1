"""Solvers: base field, integral-domain towers, and the full idempotent ring."""

from .bounds import bound_pi_degrees, bound_sigma_degree
from .hyper import hypergeometric_candidates
from .idempotent_solver import solve_plde_idempotent
from .linearize import Linearizer, constant_annihilator, echelonize_solutions
from .orbit import pseudo_orbit_basis, shift_coprime_basis
from .rational import solve_rational, universal_denominator
from .tower_solver import SolverConfig, solve_plde

__all__ = [
    "bound_pi_degrees",
    "bound_sigma_degree",
    "hypergeometric_candidates",
    "solve_plde_idempotent",
    "Linearizer",
    "constant_annihilator",
    "echelonize_solutions",
    "pseudo_orbit_basis",
    "shift_coprime_basis",
    "solve_rational",
    "universal_denominator",
    "SolverConfig",
    "solve_plde",
]
