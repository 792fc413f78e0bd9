"""Exception hierarchy shared by the engines and the command-line front end."""


class OverrankError(Exception):
    """Base class for every engine error (mapped to exit status 3 by the CLI)."""


class SizeLimitError(OverrankError, ValueError):
    pass


class DomainError(OverrankError, ValueError):
    pass


class RangeError(OverrankError, IndexError):
    pass


class RingError(OverrankError, ArithmeticError):
    """An element that must be invertible (or integral) is not."""


class ConsistencyError(OverrankError, ArithmeticError):
    """Exact arithmetic produced a value that the algebra forbids."""


class PoleError(OverrankError, ZeroDivisionError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ConvergenceError(OverrankError, ArithmeticError):
    pass


class QuadratureError(OverrankError, ArithmeticError):
    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class TailBoundError(OverrankError, ValueError):
    pass
