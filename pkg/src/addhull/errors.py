"""Exception types shared across the package.

The command line maps these onto exit codes: validation and hypothesis
failures exit 1, parse and budget failures exit 2.
"""


class ParameterError(ValueError):
    """Invalid parameters: bad prime, dimension mismatch, singular matrix."""


class EvenCharacteristicError(ParameterError):
    """Raised where an operation is defined only in odd characteristic."""


class HypothesisError(ValueError):
    """A construction's hypotheses do not hold for the given input."""


class BudgetError(RuntimeError):
    """Work refused because it exceeds an explicit budget.

    Carries the budget that would have been required, so callers can
    decide whether to retry with a larger one.
    """

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class ParseError(ValueError):
    """Malformed input file; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
