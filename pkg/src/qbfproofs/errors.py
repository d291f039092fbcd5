"""Exception types shared across the package."""


class QbfError(Exception):
    """Base class for all errors raised by qbfproofs."""


class FormatError(QbfError, ValueError):
    """Malformed QDIMACS, proof trace, circuit or sidecar text."""


class UnboundVariableError(QbfError, KeyError):
    """A variable is used that the prefix does not bind."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class BudgetExceeded(QbfError):
    """A brute-force routine was asked to exceed its variable budget."""


class InferenceError(QbfError):
    """A calculus rule was applied outside its preconditions.

    This is distinct from an *undefined* resolvent (complementary residue),
    which the rule functions report by returning ``None``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class NegationError(QbfError, ValueError):
    """The formula cannot be negated (empty matrix or empty clause)."""


class FormulaFalse(QbfError):
    """A term proof was requested for a false formula."""
