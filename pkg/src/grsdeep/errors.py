"""Exception hierarchy.

Every error raised by the library derives from ``GrsError``.  The CLI maps
the three families below onto its exit codes.
"""


class GrsError(Exception):
    """Domain error: a precondition on inputs was not met."""


class BudgetExceeded(GrsError):
    """An exhaustive search would exceed its configured size budget."""


class EngineMismatch(GrsError):
    """Two independent computations disagreed. Always a bug."""


class NotPrime(GrsError):
    pass


class OrderTooLarge(GrsError):
    pass


class ModulusReducible(GrsError):
    pass


class InvalidModulus(GrsError):
    pass


class ElementOutOfRange(GrsError):
    pass


class DivisionByZero(GrsError, ZeroDivisionError):
    pass


class FieldMismatch(GrsError):
    pass


class DuplicateAbscissa(GrsError):
    pass


class DimensionOutOfRange(GrsError):
    pass


class DegreeTooHigh(GrsError):
    pass


class LengthMismatch(GrsError):
    pass


class PreconditionViolated(GrsError):
    pass


class InvalidWitnessSet(GrsError):
    pass
