"""Exception types raised by rotquad."""


class RotquadError(Exception):
    """Base class for all library errors."""


class InvalidPointCount(RotquadError, ValueError):
    pass


class DegreeTooHigh(RotquadError, ValueError):
    pass


class IndexOutOfRange(RotquadError, IndexError):
    pass


class OrderTooHigh(RotquadError, ValueError):
    pass


class InvalidOrder(RotquadError, ValueError):
    pass


class FrequencyTooLow(RotquadError, ValueError):
    pass


class InvalidParameter(RotquadError, ValueError):
    pass


class ConstructionError(RotquadError, ArithmeticError):
    """A summation rule violated a structural invariant (e.g. a non-positive weight)."""


class NoConvergence(RotquadError, ArithmeticError):
    """Iteration budget exhausted before the convergence test was met."""

    def __init__(self, message, residual=float("nan"), iterations=0):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations
