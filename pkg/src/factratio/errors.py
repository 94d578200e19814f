"""Exception types shared across the package."""

from __future__ import annotations


class UsageError(ValueError):
    """Invalid user input: unknown claim id, out-of-cap range, bad format."""


class PreconditionError(ValueError):
    """A check was invoked outside its stated domain.

    Distinct from a check returning False: sweep drivers skip points that
    violate preconditions instead of counting them as failures.
    """


class IntegralityError(ArithmeticError):
    """An expression that must be an exact integer failed to divide."""


class NotPolynomialError(ArithmeticError):
    """A q-expression failed to reduce to a polynomial.

    Carries the witness: either the cyclotomic index ``d`` with a negative
    exponent, or the ``1 - q^factor`` divisor that left a remainder.
    """

    def __init__(self, message: str, *, d: int | None = None, factor: int | None = None):
        super().__init__(message)
        self.d = d
        self.factor = factor


class InternalCheckError(RuntimeError):
    """Two independent evaluation routes disagreed: implementation bug."""
