"""Exceptions raised by the subspace code toolkit."""


class SubspaceCodeError(ValueError):
    """Base class for every error raised by this package."""


class FieldMismatchError(SubspaceCodeError):
    """Operands live in different field contexts."""


class DivisionByZeroError(SubspaceCodeError, ZeroDivisionError):
    pass


class DimensionMismatchError(SubspaceCodeError):
    """Shapes or ambient dimensions do not agree."""


class ParameterError(SubspaceCodeError):
    """A parameter violates a domain constraint.

    The message always names the violated inequality, e.g.
    "c must satisfy max(0,2k-n) <= c <= k-1".
    """


class BudgetExceededError(SubspaceCodeError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, what, required, budget):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f'{what} needs {required} items, budget is {budget}')


class ResampleExhaustedError(SubspaceCodeError):
    """The channel could not draw an error space in general position."""
