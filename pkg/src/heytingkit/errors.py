"""Error types for heytingkit."""

from typing import Optional, Sequence, Tuple

from .logging_config import get_logger

logger = get_logger(__name__)


def log_error(error: Exception, context: Optional[str] = None) -> None:
    """Log an error with optional context.

    Args:
        error: The exception to log
        context: Optional context about where the error occurred
    """
    if context:
        logger.error("%s: %s", context, str(error))
    else:
        logger.error("%s", str(error))


class HeytingError(Exception):
    """Base class for all heytingkit errors."""

    pass


class InputError(HeytingError):
    """Malformed user input (files, formulas, orders)."""

    pass


class FormatError(InputError):
    """Error raised when an input file cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        """Initialize error.

        Args:
            message: Description of the problem
            line: 1-based line number in the offending file
        """
        self.line = line
        if line is not None:
            super().__init__(f"line {line}: {message}")
        else:
            super().__init__(message)


class FormulaSyntaxError(InputError):
    """Error raised when a formula does not parse."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class AlgebraError(InputError):
    """An order relation that does not define a Heyting algebra."""

    pass


class NotAPartialOrder(AlgebraError):
    """The closed relation is not antisymmetric."""

    def __init__(self, pair: Tuple[str, str]):
        self.pair = pair
        super().__init__(f"not a partial order: {pair[0]} <= {pair[1]} and {pair[1]} <= {pair[0]}")


class NotALattice(AlgebraError):
    """Some pair of elements lacks a meet or a join."""

    def __init__(self, pair: Tuple[str, str], operation: str):
        self.pair = pair
        self.operation = operation
        super().__init__(f"not a lattice: {pair[0]} and {pair[1]} have no {operation}")


class NotDistributive(AlgebraError):
    """Distributivity fails on a triple."""

    def __init__(self, triple: Sequence[str]):
        self.triple = tuple(triple)
        x, y, z = self.triple
        super().__init__(f"not distributive: {x} & ({y} | {z}) != ({x} & {y}) | ({x} & {z})")


class NoRelativePseudoComplement(AlgebraError):
    """Some pair has no greatest z with z & x <= y."""

    def __init__(self, pair: Tuple[str, str]):
        self.pair = pair
        super().__init__(f"no relative pseudo-complement for {pair[0]} -> {pair[1]}")


class InvalidEmbedding(HeytingError):
    """A map between algebras fails to be an injective homomorphism."""

    pass


class PreconditionViolated(HeytingError):
    """An operation was called outside its precondition."""

    pass


class IdentityViolation(HeytingError):
    """An identity that must hold was found false."""

    pass


class InvalidEPair(HeytingError):
    """A pair (a, a*) is not an E-pair."""

    pass


class InvalidTilde(HeytingError):
    """A unary table is not a tilde-negation."""

    pass


class IncompatibleTau(HeytingError):
    """Two expansions disagree on the distinguished constant."""

    pass


class NotPacked(HeytingError):
    """The inner expansion is not packed in the outer one."""

    pass


class NotEPair(HeytingError):
    """The supplied partner does not enrich the element."""

    pass


class UnboundVariable(HeytingError):
    """A term variable has no value in the valuation."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"variable p{index} is not bound")


class MissingInterpretation(HeytingError):
    """A term uses tau or ~ but the algebra interprets neither."""

    pass


class NoEligibleGamma(HeytingError):
    """No maximal ~-formula can be eliminated by a purification step."""

    pass


class BudgetExceeded(HeytingError):
    """A computation would exceed its configured budget."""

    def __init__(self, what: str, attempted: int, budget: int):
        self.what = what
        self.attempted = attempted
        self.budget = budget
        super().__init__(f"{what}: {attempted} exceeds budget {budget}")


class CommandError(HeytingError):
    """A cli command failed unexpectedly."""

    pass
