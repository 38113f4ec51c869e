"""Exception types shared by the package.

The CLI maps these to exit codes: ``UsageError`` -> 2, everything
else that signals a failed mathematical check -> 1.
"""


class UsageError(ValueError):
    """Bad arguments: mismatched fields, out-of-range exponents, wrong sizes."""


class DomainError(ArithmeticError):
    """A mathematically undefined request (inverse of zero, singular matrix)."""


class UnsupportedError(ValueError):
    """The request lies outside the supported case (e.g. decomposition for n < 3)."""


class IntegrityError(RuntimeError):
    """An internal consistency check failed; indicates a bug or invalid input."""
