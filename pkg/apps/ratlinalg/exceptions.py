"""
Exception hierarchy shared by every app.

All domain errors derive from PJJError so callers (and the pjj command)
can catch one type. Each app extends it in its own exceptions module.
"""


class PJJError(ValueError):
    """Base class for every error raised by the pjj apps."""


class DimensionMismatch(PJJError):
    pass


class SubspaceNotContained(PJJError):
    pass


class SingularMatrix(PJJError):
    pass


class InvalidScalar(PJJError):
    """Text that is not a rational literal of the form p or p/q."""

    def __init__(self, text, zero_denominator=False):
        self.text = text
        self.zero_denominator = zero_denominator
        reason = 'zero denominator' if zero_denominator else 'not a rational literal'
        super().__init__(f"Invalid scalar '{text}': {reason}")


class ContractViolation(PJJError):
    """An identity that holds by theorem failed on concrete data: a bug or corrupted input."""
