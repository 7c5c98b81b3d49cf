"""Exception types shared across the library.

Everything raised deliberately by lcforge derives from LcforgeError, so
callers (and the CLI) can catch one base class and map it to a uniform
"invalid input" outcome.
"""


class LcforgeError(Exception):
    """Base class for all lcforge errors."""


class InvalidPeriod(LcforgeError):
    """Sequence text or exponent does not describe one 2^n-bit period."""


class InvalidDigit(LcforgeError):
    """Sequence text contains a character outside its alphabet."""


class PeriodMismatch(LcforgeError):
    """Two sequences with different periods were combined."""


class CannotHalve(LcforgeError):
    """A period of length 1 cannot be folded in half."""


class InvalidSupport(LcforgeError):
    """Support positions are out of range or not strictly increasing."""


class LemmaPreconditionViolated(LcforgeError):
    """Closed-form complexity shortcut called outside its precondition."""


class SearchTooLarge(LcforgeError):
    """Pattern enumeration would exceed the search budget."""

    def __init__(self, estimated_count: int, budget: int):
        self.estimated_count = estimated_count
        self.budget = budget
        super().__init__(
            f"search would enumerate {estimated_count} patterns"
            f" (budget {budget})"
        )


class NotFoundWithinCap(LcforgeError):
    """No error pattern within the tried range lowered the complexity."""


class UndefinedForZeroSequence(LcforgeError):
    """The requested quantity is undefined for the all-zero sequence."""


class InvalidL(LcforgeError):
    """Complexity value outside [0, 2^n]."""


class InvalidParams(LcforgeError):
    """Parameter outside its documented domain."""


class TooLarge(LcforgeError):
    """Exhaustive enumeration requested beyond the supported size."""


class NoFormulaAvailable(LcforgeError):
    """No closed-form count is implemented for this (k, class) pair."""
