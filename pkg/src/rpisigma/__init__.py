"""Exact solver for parameterized linear difference equations in towers over
Q(zeta_m)(x) with one root-of-unity generator, product generators and sum
generators.  The ring decomposes into integral-domain components through its
idempotents; equations are reduced per component, solved there, and the
partial solutions are recombined exactly."""

from .errors import (
    DegenerateCoefficients,
    DegreeBoundExhausted,
    MultipleRGenerators,
    NonUnitDivisor,
    NotPrimitiveRoot,
    ParseError,
    PoleAtIndex,
    RPiSigmaError,
    SolverError,
    SubringViolation,
    UnknownIdentifier,
    UnsupportedConstantField,
)
from .evaluate import Evaluator
from .idempotent import component_ring, decompose, idempotents, project, recombine
from .reduction import (
    ComponentEquation,
    extract_component_equation,
    extract_component_plde,
    is_non_degenerate,
    shift_projection_matrix,
)
from .solver import SolverConfig, solve_plde, solve_plde_idempotent, solve_rational
from .tower import Automorphism, Tower, TowerElement

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "ComponentEquation",
    "DegenerateCoefficients",
    "DegreeBoundExhausted",
    "Evaluator",
    "MultipleRGenerators",
    "NonUnitDivisor",
    "NotPrimitiveRoot",
    "ParseError",
    "PoleAtIndex",
    "RPiSigmaError",
    "SolverConfig",
    "SolverError",
    "SubringViolation",
    "Tower",
    "TowerElement",
    "UnknownIdentifier",
    "UnsupportedConstantField",
    "component_ring",
    "decompose",
    "extract_component_equation",
    "extract_component_plde",
    "idempotents",
    "is_non_degenerate",
    "project",
    "recombine",
    "shift_projection_matrix",
    "solve_plde",
    "solve_plde_idempotent",
    "solve_rational",
]
