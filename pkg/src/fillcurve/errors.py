"""Exception hierarchy.

Everything derives from FillcurveError so callers can catch the library's
failures in one clause; the CLI maps subclasses to stable exit codes.
"""


class FillcurveError(Exception):
    """Base class for all library errors."""


class NotAPrimePower(FillcurveError, ValueError):
    pass


class DivisionByZero(FillcurveError, ZeroDivisionError):
    pass


class MixedFields(FillcurveError, ValueError):
    """Operands belong to different field contexts."""


class IncompatibleFields(FillcurveError, ValueError):
    """The target field does not contain the coefficient field."""


class BadSubfieldDegree(FillcurveError, ValueError):
    pass


class NoRootInTarget(FillcurveError, ValueError):
    pass


class DegreeZero(FillcurveError, ValueError):
    pass


class BothZero(FillcurveError, ValueError):
    pass


class ZeroForm(FillcurveError, ValueError):
    pass


class DegreeMismatch(FillcurveError, ValueError):
    pass


class IndexOutOfRange(FillcurveError, IndexError):
    pass


class EvenCharacteristic(FillcurveError, ValueError):
    """The requested construction is only proved for odd q."""


class NotClosed(FillcurveError, ValueError):
    """A group action left the supplied set."""


class PreconditionViolated(FillcurveError, ValueError):
    """An input violates a documented precondition.

    Carries enough structure for the CLI to name the offending side and
    point when a form unexpectedly has a rational point.
    """

    def __init__(self, message, side=None, point=None):
        super().__init__(message)
        self.side = side
        self.point = point


class TooLarge(FillcurveError, ValueError):
    """A guard against runaway enumeration fired; pass allow_large to lift."""


class BudgetExceeded(FillcurveError, RuntimeError):
    """The scan oracle ran out of its field-element budget.

    ``needed`` is a lower bound on the budget that would let the call
    complete (exact when the shortfall happened in the last planned phase).
    """

    def __init__(self, message, needed):
        super().__init__(message)
        self.needed = needed


class InternalError(FillcurveError, RuntimeError):
    """A should-be-impossible state; indicates a bug, not bad input."""
