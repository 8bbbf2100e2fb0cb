"""Exception hierarchy shared by all packages.

Every error carries the process exit code the CLI maps it to.
"""


class ImbametricError(Exception):
    """Base class for all errors raised by imbametric."""

    exit_code = 1
    kind = "internal"


class UsageError(ImbametricError, ValueError):
    """Invalid command line, option or metric specification."""

    exit_code = 1
    kind = "usage"


class DataError(ImbametricError, ValueError):
    """Invalid or unreadable input data."""

    exit_code = 2
    kind = "data"


class NumericError(ImbametricError, ArithmeticError):
    """A numerical procedure could not produce a valid result."""

    exit_code = 3
    kind = "numeric"


class MetricParameterError(UsageError):
    """A metric was constructed with parameters violating its constraints."""


class EmptyConfusionError(DataError):
    """Confusion matrix with zero total count."""

    def __init__(self, message: str = "empty confusion matrix"):
        super().__init__(message)


class UndefinedRateError(DataError):
    """A conditional rate was requested for a class with no mass."""

    def __init__(self, message: str = "undefined conditional rate"):
        super().__init__(message)


class ScenarioError(DataError):
    """Invalid Gaussian scenario or simulation configuration."""


class DomainError(NumericError):
    """Argument outside the mathematical domain of an operation."""


class DegenerateMetricError(NumericError):
    """A metric or derivative ratio hit a zero denominator."""

    def __init__(self, message: str = "degenerate metric input"):
        super().__init__(message)


class BoundaryDerivativeError(NumericError):
    """Derivative ratio requested at a boundary rate triple."""

    def __init__(self, message: str = "derivative undefined at boundary"):
        super().__init__(message)


class NoFixedPointError(NumericError):
    """The fixed-point search found no valid root."""

    def __init__(self, message: str = "no fixed point in domain"):
        super().__init__(message)


class QuadratureError(NumericError):
    """Numerical integration did not reach the requested accuracy."""

    def __init__(self, message: str, abserr: float, limit: int):
        super().__init__(f"{message} (error estimate {abserr:.3g}, limit {limit})")
        self.abserr = abserr
        self.limit = limit
