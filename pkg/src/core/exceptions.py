"""
Exception hierarchy shared by every layer.

Validation failures derive from ValueError so callers that only know the
built-in types still catch them.
"""
from typing import Iterable, Optional


class BicomplexFibError(Exception):
    """Base class for all toolkit errors."""


class ZeroToNegativePowerError(BicomplexFibError, ZeroDivisionError):
    """Raised when zero is raised to a negative exponent."""


class NegativeIndexError(BicomplexFibError, ValueError):
    """Raised by APIs that only accept non-negative sequence indices."""


class NonIntegralValueError(BicomplexFibError, ArithmeticError):
    """Raised when an exact value expected to be an integer is not one."""


class UnknownClaimError(BicomplexFibError, LookupError):
    """Raised when a claim id is not in the catalog."""

    def __init__(self, claim_id: str):
        super().__init__(f"Unknown claim: {claim_id}")
        self.claim_id = claim_id


class BindingOutOfDomainError(BicomplexFibError, ValueError):
    """Raised when parameter bindings or grids fall outside a claim's domain."""


class UnboundVariableError(BicomplexFibError, ValueError):
    """Raised when an expression references a variable with no binding."""

    def __init__(self, name: str):
        super().__init__(f"Unbound variable: {name}")
        self.name = name


class NegativePowerOfNonUnitError(BicomplexFibError, ValueError):
    """Raised for a negative exponent on a base other than the real units +1/-1."""


class ExpressionSyntaxError(BicomplexFibError, ValueError):
    """
    Syntax error in an identity expression.

    Attributes:
        offset: Byte offset of the offending token in the source text
        expected: Sorted token descriptions that would have been accepted
    """

    def __init__(self, message: str, offset: int, expected: Optional[Iterable[str]] = None):
        self.offset = offset
        self.expected = tuple(sorted(set(expected or ())))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class UnknownSequenceKindError(ExpressionSyntaxError):
    """Raised for a bracketed sequence term whose name is not F, L, BF or BL."""


class NonLinearIndexError(ExpressionSyntaxError):
    """Raised when an index expression is not linear in n, m, r."""
