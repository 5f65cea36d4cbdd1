"""Exception types shared across the package."""


class RPiSigmaError(Exception):
    """Base class for all library errors."""


class TowerError(RPiSigmaError):
    """Invalid difference-ring tower construction."""


class NotPrimitiveRoot(TowerError):
    """Declared root-of-unity ratio is not primitive of the stated order."""


class MultipleRGenerators(TowerError):
    """A tower may contain at most one root-of-unity generator."""


class SubringViolation(TowerError):
    """Generator data refers to parts of the tower it may not use."""


class PoleAtIndex(RPiSigmaError):
    """Numeric evaluation hit a vanishing denominator or product factor."""

    def __init__(self, index, what=""):
        self.index = index
        super().__init__(f"pole at index {index}" + (f" in {what}" if what else ""))


class SolverError(RPiSigmaError):
    """Base class for solver failures that are mathematical, not bugs."""


class DegreeBoundExhausted(SolverError):
    """Heuristic degree cap was saturated; the basis may be incomplete."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"solutions saturate the degree cap {cap}; basis may be incomplete")


class DegenerateCoefficients(SolverError):
    """Coefficient vector is degenerate and a needed component has no equation."""


class UnsupportedConstantField(SolverError):
    """Constant-field computation outside the supported cyclotomic range."""


class ParseError(RPiSigmaError):
    """Syntax error in the expression DSL, annotated with a position."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class NonUnitDivisor(RPiSigmaError):
    """Division by an element that is neither in the base field nor a unit."""


class UnknownIdentifier(RPiSigmaError):
    """Expression refers to a name the tower does not define."""
