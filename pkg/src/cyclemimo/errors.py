"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Array shapes violate an operation's contract."""


class NumericError(ArithmeticError):
    """A computation produced non-finite values."""


class StateError(RuntimeError):
    """An operation was invoked before its prerequisites were established."""


class FramingError(ValueError):
    """A bit or sample sequence cannot be partitioned as requested."""


class FittingError(ValueError):
    """Degenerate data made a fitting step impossible."""


class InsufficientDataError(ValueError):
    """Too few samples to perform the requested split or training."""


class ConfigError(ValueError):
    """An experiment configuration failed validation."""
