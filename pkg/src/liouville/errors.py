"""Exception types shared across the toolkit."""


class LiouvilleError(Exception):
    """Base class for toolkit-specific failures."""


class DomainError(LiouvilleError, ValueError):
    """A parameter point or curve left its declared domain."""


class AccuracyError(LiouvilleError, ArithmeticError):
    """A numeric routine could not reach its requested tolerance."""


class SingularityError(LiouvilleError, ArithmeticError):
    """Evaluation hit a pole or a vanishing denominator."""


class InvalidMetricError(LiouvilleError, ValueError):
    """A metric failed positive-definiteness at a sampled point."""


class TurningPointError(LiouvilleError, ArithmeticError):
    """A geodesic radicand crossed zero; the positive branch ends here."""


class UnknownChartError(LiouvilleError, KeyError):
    """Requested catalog chart does not exist."""


class UnsupportedChartError(LiouvilleError, ValueError):
    """Operation not defined for this chart (wrong ambient dimension or no embedding)."""
